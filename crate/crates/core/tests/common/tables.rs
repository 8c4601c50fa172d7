//! Published coefficient tables. Blank cells are stored as 0.

pub const Q_TOTALS: [u64; 15] = [
    1, 1, 2, 5, 15, 49, 166, 577, 2050, 7414, 27201, 100984, 378651, 1431901, 5454718,
];

pub const P_TOTALS: [u64; 11] = [1, 1, 2, 5, 15, 48, 160, 550, 1937, 6954, 25355];

/// `P_{n, n-3k}` for `k = 0..=4` (rows) and `n = 0..=14` (columns).
pub const P_TABLE: [[u64; 15]; 5] = [
    [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440,
    ],
    [
        0, 0, 0, 0, 1, 6, 28, 120, 495, 2002, 8008, 31824, 125970, 497420, 1961256,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 1, 12, 90, 550, 3003, 15288, 74256, 348840,
    ],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 20, 220, 1820, 12740],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 30],
];

/// `Q_{n, n-3k}` for `k = 0..=4` and `n = 0..=14`.
pub const Q_TABLE: [[u64; 15]; 5] = [
    [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440,
    ],
    [
        0, 0, 0, 0, 1, 7, 34, 147, 605, 2431, 9646, 38012, 149226, 584630, 2288132,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 1, 15, 121, 758, 4160, 21098, 101660, 472872,
    ],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 26, 315, 2710, 19234],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 40],
];

/// `Q_{n, n-3k}` for `k = 0..=6` and `n = 15..=21`, exactly as printed.
pub const Q_TABLE_EXTENDED: [[u64; 7]; 7] = [
    [
        9694845,
        35357670,
        129644790,
        477638700,
        1767263190,
        6564120420,
        24466267020,
    ],
    [
        8951945,
        35023365,
        137058495,
        536568150,
        2101610280,
        8235855870,
        32292718290,
    ],
    [
        2144397,
        9541895,
        41844935,
        181418250,
        779349480,
        3323000670,
        14081037000,
    ],
    [
        120887, 699447, 200720, 19892125, 100274020, 492017955, 2362240530,
    ],
    [680, 7707, 68875, 527002, 3617264, 22924330, 136717635],
    [0, 1, 57, 1295, 18718, 205953, 1888162],
    [0, 0, 0, 0, 1, 77, 2254],
];

/// Printed cells of the extended table that disagree with the closed form.
pub const SUSPECTED_MISPRINTS: [(usize, usize, u64); 1] = [(17, 3, 200720)];
