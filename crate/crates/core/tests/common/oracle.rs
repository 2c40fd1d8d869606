//! Frozen expectations from an independent high-precision oracle
//! (50-digit arithmetic, maintained outside the repository).
//! Each table row pairs exact inputs with the value the implementation
//! must reproduce to relative error <= 1e-10.
#![allow(clippy::excessive_precision)]

pub const LAPLACE_CASES: &[(u64, f64, f64)] = &[
    (1, 0.25, 1.3163844238670797),
    (100, 0.05, 0.16365093121174665),
    (50, 0.01, 0.25889195936523906),
    (1, 0.5, 1.0196669901688090),
    (2, 0.1, 1.0341466114618554),
    (5, 0.2, 0.54830476711932329),
    (10, 0.05, 0.48032009644342875),
    (20, 0.01, 0.40105495181746270),
    (40, 0.001, 0.33510548423486462),
    (75, 0.3, 0.15087001029131792),
    (128, 0.05, 0.14614882018648119),
    (250, 0.01, 0.12163361576617049),
    (500, 0.05, 0.078206415304274216),
    (1000, 0.001, 0.072015605257848063),
    (2000, 0.1, 0.039071530247150723),
    (5000, 0.01, 0.029775223836357440),
    (10000, 0.05, 0.019495784867873303),
    (50000, 0.001, 0.011098603864529854),
    (3, 0.9, 0.42124358121526357),
    (7, 0.45, 0.38737509819112909),
    (123, 0.015, 0.16458354002146910),
    (999, 0.07, 0.055341586152155400),
];

pub const UNION_CASES: &[(u64, u64, f64, f64)] = &[
    (100, 1000, 0.05, 0.30164165157217724),
    (400, 1000, 0.05, 0.15082082578608862),
    (1, 1, 0.5, 1.0196669901688090),
    (10, 50, 0.1, 0.75871356469257318),
    (50, 200, 0.05, 0.38702275602049494),
    (200, 4000, 0.01, 0.23758979264328696),
    (7, 29, 0.25, 0.82406572129605958),
    (64, 512, 0.02, 0.37264852970647670),
    (300, 300, 0.05, 0.16222202678215580),
    (1000, 15000, 0.001, 0.11731508982281589),
    (2, 9, 0.6, 1.2541500248732526),
    (33, 77, 0.33, 0.41162221259211133),
    (100, 100, 0.05, 0.26069490795420290),
    (1000, 1000, 0.05, 0.095387465614299020),
    (10000, 10000, 0.05, 0.033765890613625348),
    (100000, 100000, 0.05, 0.011706382354214802),
    (1000000, 1000000, 0.05, 0.0040008154013027413),
    (12, 4000, 0.0002, 1.0506265359445482),
    (500, 800, 0.04, 0.13406861542256616),
    (250, 2500, 0.08, 0.19778834660889772),
    (90, 14000, 0.01, 0.37331167916592440),
    (4096, 65536, 0.005, 0.059359909169403849),
];

pub const PEELING_CASES: &[(u64, u64, f64, f64, f64)] = &[
    (100, 1000, 0.05, 1.1, 0.23314816458360196),
    (25, 100, 0.05, 1.5, 0.51275881082672085),
    (9, 2, 0.5, 1.2, 0.30400596059067555),
    (50, 500, 0.01, 2.0, 0.48954936613616331),
    (200, 4000, 0.05, 1.5, 0.18948928220578953),
    (400, 10000, 0.02, 1.1, 0.12961647600749684),
    (1000, 100000, 0.05, 1.5, 0.087251135940174099),
    (100, 100, 0.05, 1.1, 0.22507081562448074),
    (1000, 1000, 0.05, 1.1, 0.073727923237198501),
    (10000, 10000, 0.05, 1.5, 0.027225839994229666),
    (100000, 100000, 0.05, 2.0, 0.0097851844569042703),
    (1000000, 1000000, 0.05, 1.1, 0.0024732063792003045),
    (17, 93, 0.3, 1.05, 0.41685667254698397),
    (60, 720, 0.1, 1.3, 0.29784358117667319),
    (33, 4000, 0.25, 1.7, 0.39284297368155024),
    (256, 65536, 0.01, 1.25, 0.18224932971150946),
    (75, 15000, 0.005, 1.5, 0.38063703223946432),
    (20, 40, 0.45, 3.0, 0.47302032886193965),
    (11, 11, 0.07, 1.15, 0.62679220671904431),
    (500, 2500, 0.02, 1.9, 0.14485010006167250),
    (140, 560, 0.06, 2.5, 0.26430579575249528),
    (8, 3, 0.35, 1.6, 0.45821875223492931),
];

pub const PSI_T4000_K3: f64 = 1618203.0695588220;
pub const PSI_T15000_K10: f64 = 977162.58428231661;
pub const ELL0_T4000_K3: u64 = 8;
pub const ELL0_T15000_K10: u64 = 7;
pub const PHASES_MAX_T4000_G005: u64 = 74;
pub const PHASES_MAX_T15000_G005: u64 = 88;

pub const PHASE_CASES: &[(u64, f64, f64, f64, f64)] = &[
    (10, 1.0, 1618203.0695588220, 1.5, 1.0355008525558225),
    (60, 1.0, 1618203.0695588220, 1.5, 0.42274145282978722),
    (30, 1.0, 1618203.0695588220, 1.5, 0.59784669596919110),
    (1, 1.0, 1618203.0695588220, 1.5, 3.2745412131225884),
    (8, 0.5, 1618203.0695588220, 1.5, 1.1001647254842360),
    (24, 0.25, 1618203.0695588220, 1.5, 0.60011035841885354),
    (100, 0.1, 1618203.0695588220, 1.5, 0.26960605551335979),
    (400, 0.03, 1618203.0695588220, 1.5, 0.11686298933428817),
    (55, 0.7, 1618203.0695588220, 1.5, 0.43038265723191568),
    (210, 0.2, 1618203.0695588220, 1.5, 0.19890729220977488),
    (777, 0.05, 1618203.0695588220, 1.5, 0.089536355766801143),
    (10, 1.0, 977162.58428231661, 1.5, 1.0170696262645682),
    (60, 0.5, 977162.58428231661, 1.5, 0.39379744107556039),
    (150, 0.2, 977162.58428231661, 1.5, 0.22992969038452218),
    (480, 0.08, 977162.58428231661, 1.5, 0.11686631679185394),
    (33, 0.9, 977162.58428231661, 1.5, 0.55558501717511889),
    (900, 0.04, 977162.58428231661, 1.5, 0.078287167313659212),
    (64, 0.35, 977162.58428231661, 1.5, 0.37016831180118822),
    (2048, 0.02, 977162.58428231661, 1.5, 0.046751251960160544),
    (12, 0.66, 977162.58428231661, 1.5, 0.90004782654205783),
    (320, 0.13, 977162.58428231661, 1.5, 0.15087220382568045),
    (5000, 0.011, 977162.58428231661, 1.5, 0.026756368353810035),
];

// (m, epsilon_m, ell_m) prefix of the phase schedule, T=4000 K=3 gamma=0.05
pub const SCHEDULE_T4000_K3: &[(u64, f64, u64)] = &[
    (0, 1.0000000000000000, 8),
    (1, 0.95238095238095238, 8),
    (2, 0.90702947845804989, 8),
    (3, 0.86383759853147608, 9),
    (4, 0.82270247479188198, 9),
    (5, 0.78352616646845903, 9),
    (6, 0.74621539663662765, 10),
    (7, 0.71068133013012157, 10),
    (8, 0.67683936202868721, 10),
    (9, 0.64460891621779734, 11),
    (10, 0.61391325354075937, 11),
    (11, 0.58467928908643750, 12),
];

pub const MIN_SAMPLES_CASES: &[(u64, f64, f64, u64)] = &[
    (1000, 0.2, 0.01, 239),
    (1, 1.0, 0.5, 1),
    (50, 0.5, 0.1, 22),
    (200, 0.3, 0.05, 80),
    (4000, 0.1, 0.00025, 1279),
    (15000, 0.25, 0.01, 197),
    (750, 0.15, 0.02, 397),
    (10, 0.9, 0.3, 5),
    (333, 0.08, 0.04, 1214),
    (1234, 0.6, 0.006, 28),
    (88, 0.44, 0.11, 31),
    (2500, 0.33, 0.009, 97),
    (600, 0.22, 0.07, 167),
    (99, 0.77, 0.013, 12),
    (3000, 0.55, 0.02, 35),
    (42, 0.63, 0.21, 13),
    (512, 0.12, 0.05, 562),
    (2048, 0.18, 0.03, 301),
    (5000, 0.07, 0.001, 2514),
    (64, 0.95, 0.45, 6),
    (1500, 0.4, 0.015, 61),
];

pub const ORACLE_DELAY_CASES: &[(u64, f64, f64, f64, u64, f64)] = &[
    (4000, 0.2, 1.0 / 4000.0, 0.5, 3, 7739.0174361536147),
    (1000, 0.3, 0.01, 0.4, 5, 2356.4491602126213),
    (15000, 0.25, 1.0 / 15000.0, 0.5, 10, 22191.292274063505),
    (200, 0.5, 0.1, 0.9, 2, 353.16456212828856),
    (2500, 0.15, 0.02, 0.25, 4, 5101.3879983330215),
    (800, 0.6, 0.05, 0.75, 7, 1155.4841741072371),
    (5000, 0.1, 0.001, 0.33, 6, 36561.329839042381),
    (12000, 0.45, 0.005, 0.6, 8, 4193.3706616764756),
    (300, 0.8, 0.2, 0.15, 3, 34.067417826798276),
    (9999, 0.05, 0.01, 0.5, 12, 381730.70484984006),
    (64, 0.7, 0.3, 0.8, 2, 83.969328819388865),
    (4096, 0.12, 0.025, 0.45, 9, 34316.663876019985),
    (700, 0.28, 0.008, 0.66, 5, 4294.2057067162442),
    (1800, 0.52, 0.09, 0.2, 11, 701.95959781216358),
    (222, 0.36, 0.04, 0.95, 4, 1772.7698409437678),
    (3333, 0.61, 0.002, 0.55, 6, 1425.4157498561557),
    (47, 0.9, 0.5, 0.1, 3, 8.5618301830408371),
    (6000, 0.2, 0.015, 0.7, 10, 24378.247208436361),
    (1500, 0.75, 0.06, 0.35, 2, 110.00876425625166),
    (880, 0.31, 0.03, 0.85, 7, 5434.8693105847940),
    (10000, 0.42, 0.0001, 0.5, 5, 3606.7339084887061),
];

pub const GAP_THRESHOLD_CASES: &[(u64, f64, f64)] = &[
    (1000, 0.01, 0.097759469936452476),
    (1, 0.5, 0.83255461115769776),
    (10, 0.1, 0.61647799877781861),
    (100, 0.05, 0.25396082203846048),
    (250, 0.02, 0.17690727526991412),
    (500, 0.01, 0.13314478421399924),
    (2000, 0.005, 0.072789541601441870),
    (4000, 0.00025, 0.056541241696731896),
    (1875, 0.01, 0.073703994000066797),
    (3125, 0.01, 0.058504969349126630),
    (15000, 0.001, 0.029906807151388782),
    (64, 0.25, 0.28500558805375833),
    (333, 0.07, 0.14991835714811714),
    (777, 0.033, 0.10586189614103777),
    (1234, 0.009, 0.089206183809173232),
    (5000, 0.0004, 0.050548570280719822),
    (25, 0.45, 0.39823125257855186),
    (9000, 0.02, 0.035602067588698650),
    (120, 0.3, 0.21863309705274471),
    (6000, 0.0001, 0.047699158840379034),
    (42, 0.6, 0.32144228617896617),
    (888, 0.012, 0.10259564669406512),
];

pub const UCB1_EXAMPLE: f64 = 2.0174271293851464;
pub const DUCB_TWO_STEP_INDEX: f64 = 1.1387799007560662;
pub const DUCB_GAMMA_T4000: f64 = 0.99604715292478953;
pub const SWUCB_WINDOW_RAW_T4000: f64 = 728.57338475031448;
pub const SWUCB_WINDOW_T4000: u64 = 729;
pub const SWUCB_EXAMPLE_INDEX: f64 = 2.2897880575287820;
pub const LAPLACE_N1_DELTA_THIRD: f64 = 1.2021588409807093;

pub const CLIPPED_MEAN_CASES: &[(f64, f64, f64)] = &[
    (0.5, 0.5, 0.50000000000000000),
    (0.9, 0.5, 0.75369047401717561),
    (0.1, 0.5, 0.24630952598282439),
    (0.3, 0.5, 0.36600229476664505),
    (0.39, 0.5, 0.42533150203308564),
    (0.399, 0.5, 0.43137941247289171),
    (0.3999, 0.5, 0.43198508505104652),
    (0.45, 0.5, 0.46590581354757085),
    (0.55, 0.5, 0.53409418645242915),
    (0.6001, 0.5, 0.56801491494895348),
    (0.601, 0.5, 0.56862058752710829),
    (0.61, 0.5, 0.57466849796691436),
    (0.7, 0.5, 0.63399770523335495),
    (0.2, 0.25, 0.23000549677365782),
    (0.8, 0.1, 0.79915092973831704),
    (0.05, 0.3, 0.14627824922004459),
    (0.95, 0.2, 0.89273110002766125),
    (0.5, 1.0, 0.50000000000000000),
    (0.35, 0.75, 0.42617152365500025),
    (0.65, 0.05, 0.64999999999999120),
    (0.0, 0.5, 0.19522578889230152),
    (1.0, 0.4, 0.84122474271107821),
];

pub const BERN3_CP0_OPT_SUM: f64 = 3.6033163265306122;
pub const BERN3_CP0_CHG_SUM: f64 = 14.714427437641723;
pub const BERN3_CP0_H1: f64 = 14.714427437641723;
pub const BERN3_CP0_H2: f64 = 8.1833504265114332;

// (before row, after row, x, delta, H1, H2) — 3-arm synthetic changepoints
pub const HARDNESS_CASES: &[([f64; 3], [f64; 3], u64, f64, f64, f64)] = &[
    ([0.66400000000000000, 0.94700000000000000, 0.23000000000000000], [0.42900000000000000, 0.93600000000000000, 0.57900000000000000], 3952, 0.050000000000000000, 26.317854276764121, 10.015866521127614),
    ([0.89200000000000000, 0.60300000000000000, 0.63000000000000000], [0.12100000000000000, 0.56400000000000000, 0.16300000000000000], 2136, 0.058000000000000000, 26.540952343936338, 6.6648321347713957),
    ([0.33200000000000000, 0.47500000000000000, 0.60600000000000000], [0.073000000000000000, 0.73600000000000000, 0.94700000000000000], 864, 0.024000000000000000, 71.591498390152572, 8.5762916327808010),
    ([0.22000000000000000, 0.39900000000000000, 0.76200000000000000], [0.67700000000000000, 0.32000000000000000, 0.23100000000000000], 2632, 0.016000000000000000, 168.56547040618856, 7.1330845176381393),
    ([0.88000000000000000, 0.25100000000000000, 0.77400000000000000], [0.077000000000000000, 0.19600000000000000, 0.86300000000000000], 1328, 0.060000000000000000, 127.79753286440879, 9.5771985916943209),
    ([0.42800000000000000, 0.41900000000000000, 0.72600000000000000], [0.77700000000000000, 0.80000000000000000, 0.83100000000000000], 664, 0.082000000000000000, 21.870946170669032, 0.48905685112472981),
    ([0.69200000000000000, 0.17100000000000000, 0.65800000000000000], [0.27700000000000000, 0.51200000000000000, 0.37100000000000000], 3752, 0.024000000000000000, 868.73594495016594, 4.4547002179394853),
    ([0.42400000000000000, 0.51500000000000000, 0.35000000000000000], [0.81300000000000000, 0.48000000000000000, 0.90700000000000000], 1264, 0.074000000000000000, 157.48930833845919, 5.1203037838244606),
    ([0.28400000000000000, 0.12300000000000000, 0.93000000000000000], [0.62900000000000000, 0.084000000000000000, 0.89500000000000000], 856, 0.046000000000000000, 8.4015963032976265, 8.0731135072869606),
    ([0.73200000000000000, 0.73900000000000000, 0.40200000000000000], [0.48100000000000000, 0.32000000000000000, 0.23900000000000000], 1184, 0.092000000000000000, 20416.968485040381, 2.8368283631484453),
    ([0.84000000000000000, 0.37500000000000000, 0.15400000000000000], [0.68500000000000000, 0.47600000000000000, 0.79500000000000000], 456, 0.060000000000000000, 44.057103752751622, 2.4273172571598597),
    ([0.79600000000000000, 0.72300000000000000, 0.71800000000000000], [0.19300000000000000, 0.060000000000000000, 0.69500000000000000], 472, 0.026000000000000000, 352.01801661088293, 4.7804018696404354),
    ([0.68400000000000000, 0.41500000000000000, 0.63800000000000000], [0.81700000000000000, 0.15600000000000000, 0.88300000000000000], 3008, 0.024000000000000000, 486.40939101572981, 12.472060578906385),
    ([0.66800000000000000, 0.45500000000000000, 0.42200000000000000], [0.94100000000000000, 0.69200000000000000, 0.075000000000000000], 968, 0.090000000000000000, 39.526037562979734, 9.2821920995640541),
    ([0.80000000000000000, 0.47900000000000000, 0.87800000000000000], [0.83700000000000000, 0.54800000000000000, 0.21500000000000000], 1744, 0.028000000000000000, 170.64691656028297, 8.3842996486976491),
    ([0.47200000000000000, 0.88700000000000000, 0.35800000000000000], [0.42500000000000000, 0.86800000000000000, 0.087000000000000000], 1944, 0.078000000000000000, 13.616372326084884, 11.356192576123009),
    ([0.41600000000000000, 0.42300000000000000, 0.30600000000000000], [0.82500000000000000, 0.40000000000000000, 0.77500000000000000], 3616, 0.054000000000000000, 20481.214620408760, 8.0820783412071258),
    ([0.23200000000000000, 0.071000000000000000, 0.086000000000000000], [0.35300000000000000, 0.21200000000000000, 0.46300000000000000], 1608, 0.060000000000000000, 125.63648804432381, 3.3299529292988424),
    ([0.87600000000000000, 0.059000000000000000, 0.42600000000000000], [0.32900000000000000, 0.17200000000000000, 0.24300000000000000], 2736, 0.056000000000000000, 111.51736502000979, 2.6364919196622120),
    ([0.28800000000000000, 0.64300000000000000, 0.15400000000000000], [0.27700000000000000, 0.18400000000000000, 0.25500000000000000], 3672, 0.052000000000000000, 102.77611744063276, 1.7791473933056744),
    ([0.75600000000000000, 0.33900000000000000, 0.59400000000000000], [0.45300000000000000, 0.38000000000000000, 0.88300000000000000], 4000, 0.086000000000000000, 43.854742616383450, 10.127405873309807),
    ([0.90800000000000000, 0.11500000000000000, 0.61800000000000000], [0.53300000000000000, 0.060000000000000000, 0.22300000000000000], 3208, 0.086000000000000000, 344.09885279798318, 8.6256011419923008),
];

pub struct BoundCase {
    pub rows: &'static [&'static [f64]],
    pub starts: &'static [u64],
    pub horizon: u64,
    pub t: u64,
    pub delta: f64,
    pub gamma: f64,
    pub thm1: [f64; 4],
    pub thm2: [f64; 5],
    pub thm3_gap_dep: f64,
    pub thm3_gap_indep: f64,
    pub ucbl_leading: f64,
    pub impcpd_leading: f64,
}

pub const BOUNDS_BERN3: BoundCase = BoundCase {
    rows: &[&[0.10000000000000000, 0.20000000000000000, 0.90000000000000000], &[0.40000000000000000, 0.90000000000000000, 0.10000000000000000], &[0.50000000000000000, 0.10000000000000000, 0.20000000000000000], &[0.20000000000000000, 0.20000000000000000, 0.30000000000000000]],
    starts: &[1, 1001, 2001, 3001],
    horizon: 4000,
    t: 4000,
    delta: 0.00025000000000000000,
    gamma: 0.050000000000000000,
    thm1: [1580.6088885565864, 7013.0584634168294, 189867.53810608649, 400.00000000000000],
    thm2: [4461153351.3547226, 1902.7532062077381, 4779.1961563286390, 74068.648270381384, 400.00000000000000],
    thm3_gap_dep: 55.202984059418817,
    thm3_gap_indep: 9.4868329805051380,
    ucbl_leading: 908.56761619029703,
    impcpd_leading: 109.54451150103322,
};

pub const BOUNDS_BERN3_ALT: BoundCase = BoundCase {
    rows: &[&[0.10000000000000000, 0.20000000000000000, 0.90000000000000000], &[0.40000000000000000, 0.90000000000000000, 0.10000000000000000], &[0.50000000000000000, 0.10000000000000000, 0.20000000000000000], &[0.20000000000000000, 0.20000000000000000, 0.30000000000000000]],
    starts: &[1, 1001, 2001, 3001],
    horizon: 4000,
    t: 4000,
    delta: 0.010000000000000000,
    gamma: 0.10000000000000000,
    thm1: [1580.6088885565864, 21234.588729291526, 304618.35642481241, 0.0],
    thm2: [335846412.84847617, 1902.7532062077381, 9459.4575444295192, 101373.27635129559, 0.0],
    thm3_gap_dep: 28.962762902912729,
    thm3_gap_indep: 9.4868329805051380,
    ucbl_leading: 908.56761619029703,
    impcpd_leading: 109.54451150103322,
};

pub const BOUNDS_TOY2: BoundCase = BoundCase {
    rows: &[&[0.20000000000000000, 0.70000000000000000], &[0.80000000000000000, 0.30000000000000000]],
    starts: &[1, 501],
    horizon: 1000,
    t: 1000,
    delta: 0.0010000000000000000,
    gamma: 0.050000000000000000,
    thm1: [165.78612669557129, 1626.9489564599522, 20692.104917050943, 0.0],
    thm2: [189384897.69716642, 309.01207918734727, 1108.4744868386048, 7648.4687084057182, 0.0],
    thm3_gap_dep: 9.4148980702170191,
    thm3_gap_indep: 2.2360679774997897,
    ucbl_leading: 218.44240200635403,
    impcpd_leading: 31.622776601683793,
};

pub const BOUNDS_TOY4: BoundCase = BoundCase {
    rows: &[&[0.15000000000000000, 0.35000000000000000, 0.55000000000000000, 0.75000000000000000], &[0.70000000000000000, 0.50000000000000000, 0.30000000000000000, 0.10000000000000000], &[0.25000000000000000, 0.85000000000000000, 0.45000000000000000, 0.65000000000000000]],
    starts: &[1, 2001, 4001],
    horizon: 6000,
    t: 6000,
    delta: 0.00016666666666666667,
    gamma: 0.050000000000000000,
    thm1: [1435.4199334546817, 29382.603096546706, 814967.12670658912, 0.0],
    thm2: [12836976369.174393, 2143.6448968990087, 15285.457652824261, 257276.18404327131, 0.0],
    thm3_gap_dep: 70.701280582064507,
    thm3_gap_indep: 10.954451150103322,
    ucbl_leading: 952.98409338871952,
    impcpd_leading: 109.54451150103322,
};

pub const BOUNDS_STATIONARY: BoundCase = BoundCase {
    rows: &[&[0.10000000000000000, 0.50000000000000000, 0.90000000000000000]],
    starts: &[1],
    horizon: 2000,
    t: 2000,
    delta: 0.00050000000000000000,
    gamma: 0.050000000000000000,
    thm1: [171.02030533969685, 0.0, 0.0, 0.0],
    thm2: [1307482318.2932389, 307.90840964993756, 0.0, 0.0, 0.0],
    thm3_gap_dep: 0.0,
    thm3_gap_indep: 0.0,
    ucbl_leading: 0.0,
    impcpd_leading: 0.0,
};

pub const BOUNDS_BERN3_GRID: &[(u64, f64, f64, [f64; 4], [f64; 5])] = &[
    (2000, 0.001, 0.05, [1448.5148401470197, 6631.7146127334811, 185263.10081140502, 200.00000000000000], [4461153351.3547226, 1902.7532062077381, 4931.4507042965618, 78863.146272874522, 400.00000000000000]),
    (4000, 0.0005, 0.02, [1580.6088885565864, 7122.1417742703055, 195819.99249862579, 400.00000000000000], [155185334884.83873, 1902.7532062077381, 4853.5332722488929, 76390.742163546720, 400.00000000000000]),
    (6000, 0.002, 0.05, [1657.8789534446280, 7716.1376360108672, 219132.77252225133, 600.00000000000000], [4461153351.3547226, 1902.7532062077381, 5013.2453996235198, 81500.943226271336, 400.00000000000000]),
    (8000, 0.00025, 0.1, [1712.7029369661531, 7599.1511336988992, 205735.07621217297, 800.00000000000000], [335846412.84847617, 1902.7532062077381, 4779.1961563286390, 74068.648270381384, 400.00000000000000]),
    (10000, 0.01, 0.05, [1755.2277223166040, 23580.494250972232, 338271.27494621157, 0.0], [4461153351.3547226, 1902.7532062077381, 9459.4575444295192, 101373.27635129559, 0.0]),
    (12000, 0.005, 0.33, [1789.9730018541947, 23622.761909861763, 332895.28759533334, 0.0], [6052304.6093216523, 1902.7532062077381, 9292.4662075280074, 97825.707865230775, 0.0]),
    (16000, 0.0001, 0.05, [1844.7969853757199, 8025.5842196472743, 213041.86395633701, 1600.0000000000000], [4461153351.3547226, 1902.7532062077381, 4685.9741961718128, 71207.295711710208, 400.00000000000000]),
    (20000, 0.02, 0.6, [1887.3217707261707, 25827.738573948029, 377415.38211951435, 0.0], [1159965.0457554579, 1902.7532062077381, 9635.7878685303214, 105187.82596885485, 0.0]),
    (30000, 0.0002, 0.05, [1964.5918356142123, 8674.4258119805726, 233705.72949636638, 3000.0000000000000], [4461153351.3547226, 1902.7532062077381, 4755.9821796514068, 73350.848903644203, 400.00000000000000]),
    (50000, 0.001, 0.15, [2061.9406044861882, 9440.1529472571184, 263719.43144005494, 5000.0000000000000], [79249457.609680930, 1902.7532062077381, 4931.4507042965618, 78863.146272874522, 400.00000000000000]),
    (4000, 0.05, 0.05, [1580.6088885565864, 22189.330526747868, 332626.43504481398, 0.0], [4461153351.3547226, 1902.7532062077381, 9884.7702083132579, 110694.02355556015, 0.0]),
    (4000, 0.25, 0.05, [1580.6088885565864, 23285.634600778969, 366306.41041579409, 0.0], [4461153351.3547226, 1902.7532062077381, 10373.145188224080, 121902.30886987580, 0.0]),
    (5500, 0.004, 0.07, [1641.2970710297472, 7770.0118296571422, 224448.33387662943, 550.00000000000000], [1252313101.2608420, 1902.7532062077381, 5099.2499700867203, 84321.303403830944, 400.00000000000000]),
    (7777, 0.0008, 0.25, [1707.3153146027221, 7776.1710300504345, 216111.60677557496, 777.70000000000000], [14336726.181975111, 1902.7532062077381, 4905.9586619233137, 78049.922468071744, 400.00000000000000]),
    (9999, 0.003, 0.4, [1755.2086642208262, 8250.2413278738161, 236627.25782803245, 999.90000000000000], [3442247.9562922242, 1902.7532062077381, 5063.0208369875676, 83127.388391138696, 400.00000000000000]),
    (14000, 0.0015, 0.09, [1819.3497171241323, 8409.4890825182516, 237182.83454782879, 1400.0000000000000], [493521329.70173036, 1902.7532062077381, 4978.8064098587928, 80385.031637931187, 400.00000000000000]),
    (25000, 0.0006, 0.05, [1929.8465560766215, 8731.8658348267880, 241074.65252191672, 2500.0000000000000], [4461153351.3547226, 1902.7532062077381, 4873.6696858089056, 77025.919226366120, 400.00000000000000]),
    (40000, 0.009, 0.8, [2019.4158191357374, 27055.246902075516, 387052.63782551224, 0.0], [587895.37799961690, 1902.7532062077381, 9433.4933105569024, 100817.54317330292, 0.0]),
    (64000, 0.00033, 0.05, [2108.9850821948533, 9414.9198089261158, 256460.19205209343, 6400.0000000000000], [4461153351.3547226, 1902.7532062077381, 4808.5588325498807, 74981.577832687695, 400.00000000000000]),
    (100000, 0.0001, 1.0, [2194.0346528957550, 9544.9038713889951, 253372.72108698148, 10000.000000000000], [367020.19025856285, 1902.7532062077381, 4685.9741961718128, 71207.295711710208, 400.00000000000000]),
];

pub const COROLLARY1_C1_DEFINITION: f64 = 194481.00000000000;
pub const COROLLARY1_C1_PROOF: f64 = 9261.0000000000000;
pub const THM3_GAP_INDEP_K10_G3_T15000: f64 = 33.541019662496845;

pub const GAUSS10_CLIPPED_A: [f64; 10] = [
    0.36600229476664505, 0.42533150203308564, 0.43137941247289171, 0.43198508505104652, 0.46590581354757085,
    0.53409418645242915, 0.56801491494895348, 0.56862058752710829, 0.57466849796691436, 0.63399770523335495,
];
pub const GAUSS10_CLIPPED_B: [f64; 10] = [
    0.56801491494895348, 0.56862058752710829, 0.57466849796691436, 0.63399770523335495, 0.53409418645242915,
    0.46590581354757085, 0.43198508505104652, 0.43137941247289171, 0.42533150203308564, 0.36600229476664505,
];

