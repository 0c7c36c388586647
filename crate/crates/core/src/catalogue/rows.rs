/// One embedded catalogue row, with weights stated explicitly.
pub(crate) struct RawRow {
    pub label: &'static str,
    pub h: &'static [(usize, u64)],
    pub t: &'static [(usize, u64)],
    pub f: [u64; 4],
    pub comments: &'static str,
}

pub(crate) const ROWS: &[RawRow] = &[
    RawRow {
        label: "A^3_1(10)",
        h: &[(2, 15), (3, 10)],
        t: &[(4, 10), (6, 5)],
        f: [15, 75, 120, 60],
        comments: "type A(A4)",
    },
    RawRow {
        label: "A^3_1(12)",
        h: &[(2, 18), (3, 16)],
        t: &[(3, 12), (6, 12)],
        f: [24, 120, 192, 96],
        comments: "type A(D4)",
    },
    RawRow {
        label: "A^3_1(13)",
        h: &[(2, 21), (3, 19)],
        t: &[(3, 6), (4, 10), (6, 9), (7, 3)],
        f: [28, 148, 240, 120],
        comments: "subarrangement of A(B4)",
    },
    RawRow {
        label: "A^3_1(14)",
        h: &[(2, 25), (3, 20), (4, 1)],
        t: &[(3, 2), (4, 16), (5, 2), (6, 8), (7, 2), (8, 2)],
        f: [32, 176, 288, 144],
        comments: "subarrangement of A(B4)",
    },
    RawRow {
        label: "A^3_1(15)",
        h: &[(2, 30), (3, 19), (4, 3)],
        t: &[(4, 18), (5, 6), (6, 8), (8, 3), (9, 1)],
        f: [36, 204, 336, 168],
        comments: "subarrangement of A(B4)",
    },
    RawRow {
        label: "A^3_2(15)",
        h: &[(2, 27), (3, 26)],
        t: &[(4, 24), (6, 6), (7, 9)],
        f: [39, 219, 360, 180],
        comments: "crystallographic Nr. 1",
    },
    RawRow {
        label: "A^3_1(16)",
        h: &[(2, 36), (3, 16), (4, 6)],
        t: &[(4, 16), (5, 12), (6, 8), (9, 4)],
        f: [40, 232, 384, 192],
        comments: "type A(B4)",
    },
    RawRow {
        label: "A^3_1(17)",
        h: &[(2, 34), (3, 28), (4, 3)],
        t: &[(3, 12), (4, 20), (6, 14), (8, 6), (9, 1)],
        f: [53, 293, 480, 240],
        comments: "crystallographic Nr. 2",
    },
    RawRow {
        label: "A^3_1(18)",
        h: &[(2, 39), (3, 32), (4, 3)],
        t: &[(4, 36), (5, 3), (6, 8), (7, 6), (8, 6), (9, 1)],
        f: [60, 348, 576, 288],
        comments: "crystallographic Nr. 3",
    },
    RawRow {
        label: "A^3_1(21)",
        h: &[(2, 51), (3, 41), (4, 6)],
        t: &[(3, 12), (4, 38), (5, 6), (6, 21), (7, 3), (8, 6), (10, 4)],
        f: [90, 522, 864, 432],
        comments: "missing in the Grünbaum–Shephard catalogue; crystallographic Nr. 4",
    },
    RawRow {
        label: "A^3_1(22)",
        h: &[(2, 57), (3, 40), (4, 9)],
        t: &[(3, 12), (4, 48), (5, 6), (6, 20), (8, 6), (9, 4), (10, 4)],
        f: [100, 580, 960, 480],
        comments: "missing in the Grünbaum–Shephard catalogue; crystallographic Nr. 5",
    },
    RawRow {
        label: "A^3_1(24)",
        h: &[(2, 72), (3, 32), (4, 18)],
        t: &[(4, 96), (9, 24)],
        f: [120, 696, 1152, 576],
        comments: "type A(F4); crystallographic Nr. 6",
    },
    RawRow {
        label: "A^3_1(25)",
        h: &[(2, 75), (3, 55), (4, 10)],
        t: &[(4, 60), (5, 30), (6, 25), (7, 15), (10, 10)],
        f: [140, 860, 1440, 720],
        comments: "missing in the Grünbaum–Shephard catalogue; crystallographic Nr. 7",
    },
    RawRow {
        label: "A^3_1(27)",
        h: &[(2, 81), (3, 70), (5, 6)],
        t: &[(3, 30), (4, 60), (6, 67), (10, 12), (15, 1)],
        f: [170, 1010, 1680, 840],
        comments: "subarrangement of A(H4)",
    },
    RawRow {
        label: "A^3_1(28)",
        h: &[(2, 90), (3, 76), (5, 6)],
        t: &[(4, 100), (6, 58), (7, 15), (10, 12), (15, 1)],
        f: [186, 1146, 1920, 960],
        comments: "subarrangement of A(H4)",
    },
    RawRow {
        label: "A^3_2(28)",
        h: &[(2, 90), (3, 64), (4, 16)],
        t: &[(3, 24), (4, 84), (5, 18), (6, 40), (8, 18), (9, 3), (11, 6), (13, 1)],
        f: [194, 1154, 1920, 960],
        comments: "crystallographic Nr. 8",
    },
    RawRow {
        label: "A^3_1(30)",
        h: &[(2, 99), (3, 84), (4, 9), (6, 2)],
        t: &[(4, 144), (6, 36), (7, 24), (8, 18), (13, 6)],
        f: [228, 1380, 2304, 1152],
        comments: "crystallographic Nr. 9",
    },
    RawRow {
        label: "A^3_1(32)",
        h: &[(2, 120), (3, 76), (4, 18), (5, 4)],
        t: &[(3, 24), (4, 120), (5, 24), (6, 68), (8, 6), (9, 10), (10, 8), (13, 6)],
        f: [266, 1610, 2688, 1344],
        comments: "missing in the Grünbaum–Shephard catalogue; crystallographic Nr. 10",
    },
    RawRow {
        label: "A^3_2(32)",
        h: &[(2, 124), (3, 64), (4, 30)],
        t: &[(4, 144), (5, 48), (6, 40), (9, 12), (10, 16), (13, 4)],
        f: [264, 1608, 2688, 1344],
        comments: "missing in the Grünbaum–Shephard catalogue; crystallographic Nr. 11",
    },
    RawRow {
        label: "A^3_1(60)",
        h: &[(2, 450), (3, 200), (5, 72)],
        t: &[(4, 600), (6, 660), (15, 60)],
        f: [1320, 8520, 14400, 7200],
        comments: "type A(H4)",
    },
];
