//! Published closed forms used as regression fixtures. Each value is stored
//! in the printed shape (unexpanded `s#` sums, factored `ĥ`) and expanded
//! here, so a mismatch always points at the engine or at a transcription.

use crate::exactring::{LaurentQT, RationalQT};
use crate::partitions::{Partition, PartitionPair};
use crate::skein::unknot_full;
use crate::symfun::HEntry;

type Lin = (i64, i64);

fn at(e: Lin, k: i64) -> i64 {
    e.0 * k + e.1
}

fn pair(s: &str) -> PartitionPair {
    s.parse().expect("fixture label")
}

fn poly(s: &str) -> LaurentQT {
    s.parse().expect("fixture polynomial")
}

/// `q^{a} t^{b} Σ c q^{x} t^{y} s#_{ρ,ν}` with exponents linear in `k`.
struct SharpSum {
    q: Lin,
    t: Lin,
    terms: &'static [(i64, Lin, Lin, &'static str)],
}

impl SharpSum {
    fn value(&self, k: i64) -> RationalQT {
        let terms: Vec<RationalQT> = self
            .terms
            .iter()
            .map(|&(c, x, y, p)| unknot_full(&pair(p)).mul_laurent(&LaurentQT::monomial(c, at(x, k), at(y, k))))
            .collect();
        RationalQT::sum_many(&terms).mul_laurent(&LaurentQT::monomial(1, at(self.q, k), at(self.t, k)))
    }
}

const E: &str = "[[],[]]";
const P11_11: &str = "[[1,1],[1,1]]";
const P11_2: &str = "[[1,1],[2]]";
const P2_11: &str = "[[2],[1,1]]";
const P2_2: &str = "[[2],[2]]";

static TORUS_KNOT_W: [(&str, SharpSum); 6] = [
    (
        "[[1],[1]]",
        SharpSum {
            q: (0, 0),
            t: (-8, -4),
            terms: &[
                (1, (0, 0), (0, 0), E),
                (1, (-4, -2), (4, 2), P11_11),
                (-1, (0, 0), (4, 2), P11_2),
                (-1, (0, 0), (4, 2), P2_11),
                (1, (4, 2), (4, 2), P2_2),
            ],
        },
    ),
    (
        "[[2],[1]]",
        SharpSum {
            q: (-8, -4),
            t: (-12, -6),
            terms: &[
                (-1, (-2, -1), (2, 1), "[[1,1],[]]"),
                (1, (2, 1), (2, 1), "[[2],[]]"),
                (-1, (-2, -1), (6, 3), "[[2,2],[1,1]]"),
                (1, (2, 1), (6, 3), "[[2,2],[2]]"),
                (1, (2, 1), (6, 3), "[[3,1],[1,1]]"),
                (-1, (6, 3), (6, 3), "[[3,1],[2]]"),
                (-1, (10, 5), (6, 3), "[[4],[1,1]]"),
                (1, (14, 7), (6, 3), "[[4],[2]]"),
            ],
        },
    ),
    (
        "[[1,1],[1]]",
        SharpSum {
            q: (8, 4),
            t: (-12, -6),
            terms: &[
                (-1, (-2, -1), (2, 1), "[[1,1],[]]"),
                (1, (2, 1), (2, 1), "[[2],[]]"),
                (-1, (-14, -7), (6, 3), "[[1,1,1,1],[1,1]]"),
                (1, (-10, -5), (6, 3), "[[1,1,1,1],[2]]"),
                (1, (-6, -3), (6, 3), "[[2,1,1],[1,1]]"),
                (-1, (-2, -1), (6, 3), "[[2,1,1],[2]]"),
                (-1, (-2, -1), (6, 3), "[[2,2],[1,1]]"),
                (1, (2, 1), (6, 3), "[[2,2],[2]]"),
            ],
        },
    ),
    (
        "[[1,1],[1,1]]",
        SharpSum {
            q: (16, 8),
            t: (-16, -8),
            terms: &[
                (1, (0, 0), (0, 0), E),
                (1, (-4, -2), (4, 2), P11_11),
                (-1, (0, 0), (4, 2), P11_2),
                (-1, (0, 0), (4, 2), P2_11),
                (1, (4, 2), (4, 2), P2_2),
                (1, (-24, -12), (8, 4), "[[1,1,1,1],[1,1,1,1]]"),
                (-1, (-16, -8), (8, 4), "[[1,1,1,1],[2,1,1]]"),
                (1, (-12, -6), (8, 4), "[[1,1,1,1],[2,2]]"),
                (-1, (-16, -8), (8, 4), "[[2,1,1],[1,1,1,1]]"),
                (1, (-8, -4), (8, 4), "[[2,1,1],[2,1,1]]"),
                (-1, (-4, -2), (8, 4), "[[2,1,1],[2,2]]"),
                (1, (-12, -6), (8, 4), "[[2,2],[1,1,1,1]]"),
                (-1, (-4, -2), (8, 4), "[[2,2],[2,1,1]]"),
                (1, (0, 0), (8, 4), "[[2,2],[2,2]]"),
            ],
        },
    ),
    (
        "[[1,1],[2]]",
        SharpSum {
            q: (0, 0),
            t: (-16, -8),
            terms: &[
                (1, (-4, -2), (4, 2), P11_11),
                (-1, (0, 0), (4, 2), P11_2),
                (-1, (0, 0), (4, 2), P2_11),
                (1, (4, 2), (4, 2), P2_2),
                (1, (-12, -6), (8, 4), "[[1,1,1,1],[2,2]]"),
                (-1, (-8, -4), (8, 4), "[[1,1,1,1],[3,1]]"),
                (1, (0, 0), (8, 4), "[[1,1,1,1],[4]]"),
                (-1, (-4, -2), (8, 4), "[[2,1,1],[2,2]]"),
                (1, (0, 0), (8, 4), "[[2,1,1],[3,1]]"),
                (-1, (8, 4), (8, 4), "[[2,1,1],[4]]"),
                (1, (0, 0), (8, 4), "[[2,2],[2,2]]"),
                (-1, (4, 2), (8, 4), "[[2,2],[3,1]]"),
                (1, (12, 6), (8, 4), "[[2,2],[4]]"),
            ],
        },
    ),
    (
        "[[2],[2]]",
        SharpSum {
            q: (-16, -8),
            t: (-16, -8),
            terms: &[
                (1, (0, 0), (0, 0), E),
                (1, (-4, -2), (4, 2), P11_11),
                (-1, (0, 0), (4, 2), P11_2),
                (-1, (0, 0), (4, 2), P2_11),
                (1, (4, 2), (4, 2), P2_2),
                (1, (0, 0), (8, 4), "[[2,2],[2,2]]"),
                (-1, (4, 2), (8, 4), "[[2,2],[3,1]]"),
                (1, (12, 6), (8, 4), "[[2,2],[4]]"),
                (-1, (4, 2), (8, 4), "[[3,1],[2,2]]"),
                (1, (8, 4), (8, 4), "[[3,1],[3,1]]"),
                (-1, (16, 8), (8, 4), "[[3,1],[4]]"),
                (1, (12, 6), (8, 4), "[[4],[2,2]]"),
                (-1, (16, 8), (8, 4), "[[4],[3,1]]"),
                (1, (24, 12), (8, 4), "[[4],[4]]"),
            ],
        },
    ),
];

/// `W_{[λ,μ]}(T(2,2k+1))` for the six printed labels.
pub fn torus_knot_w(k: i64) -> Vec<(PartitionPair, RationalQT)> {
    TORUS_KNOT_W.iter().map(|(p, f)| (pair(p), f.value(k))).collect()
}

static HOPF_W: [([&str; 2], SharpSum); 3] = [
    (
        ["[[2],[]]", "[[],[2]]"],
        SharpSum {
            q: (0, 0),
            t: (0, 0),
            terms: &[(1, (0, 0), (0, 0), P2_2), (1, (-4, 0), (-2, 0), "[[1],[1]]"), (1, (-4, 0), (-4, 0), E)],
        },
    ),
    (
        ["[[2],[]]", "[[],[1,1]]"],
        SharpSum {
            q: (0, 0),
            t: (0, 0),
            terms: &[(1, (0, 0), (0, 0), P2_11), (1, (0, 0), (-2, 0), "[[1],[1]]")],
        },
    ),
    (
        ["[[1,1],[]]", "[[],[1,1]]"],
        SharpSum {
            q: (0, 0),
            t: (0, 0),
            terms: &[(1, (0, 0), (0, 0), P11_11), (1, (4, 0), (-2, 0), "[[1],[1]]"), (1, (4, 0), (-4, 0), E)],
        },
    ),
];

/// `W_{[λ¹,∅],[∅,μ²]}(T(2,2k))` for the three printed label pairs.
pub fn two_component_w(k: i64) -> Vec<([PartitionPair; 2], RationalQT)> {
    HOPF_W
        .iter()
        .map(|([a, b], f)| ([pair(a), pair(b)], f.value(k)))
        .collect()
}

/// `Ž_{(2)(2)}` of `T(2,2k)` with its second component reversed.
pub fn reversed_two_component_z22(k: i64) -> RationalQT {
    let inner = SharpSum {
        q: (0, 0),
        t: (0, 0),
        terms: &[
            (1, (0, 0), (0, 0), P2_2),
            (-2, (0, 0), (0, 0), P2_11),
            (1, (0, 0), (0, 0), P11_11),
            (1, (-4, 0), (-2, 0), "[[1],[1]]"),
            (-2, (0, 0), (-2, 0), "[[1],[1]]"),
            (1, (4, 0), (-2, 0), "[[1],[1]]"),
            (1, (-4, 0), (-4, 0), E),
            (1, (4, 0), (-4, 0), E),
        ],
    };
    inner.value(k).mul_laurent(&LaurentQT::q_bracket(2).pow(2))
}

/// One printed `ĥ` value: `(t²-1) Σ_g c_g(t) z^{2g-2}`.
#[derive(Clone, Debug)]
pub struct HatHCase {
    /// Self-writhes of the two components.
    pub writhe: (i64, i64),
    pub labels: [Partition; 2],
    pub value: RationalQT,
}

static HAT_H: [((i64, i64), &str, &str, &[&str]); 20] = [
    ((0, 0), "[2]", "[2]", &["t^-2-7+6t^2", "2t^2"]),
    ((0, 0), "[2]", "[1,1]", &["-2t^-4+3t^-2-3+2t^2"]),
    ((0, 0), "[1,1]", "[2]", &["-2t^-4+3t^-2-3+2t^2"]),
    ((0, 0), "[1,1]", "[1,1]", &["-6t^-4+7t^-2-1", "-2t^-4"]),
    ((1, -1), "[2]", "[2]", &["7t^-2-11+4t^2", "-2+2t^2"]),
    ((1, -1), "[2]", "[1,1]", &["-2t^-4+19t^-2-19+2t^2", "4t^-2-4"]),
    ((1, -1), "[1,1]", "[2]", &["-2t^-4+3t^-2-3+2t^2"]),
    ((1, -1), "[1,1]", "[1,1]", &["-4t^-4+11t^-2-7", "-2t^-4+2t^-2"]),
    ((1, 0), "[2]", "[2]", &["3-17t^2+14t^4", "-4t^2+10t^4", "2t^4"]),
    ((1, 0), "[2]", "[1,1]", &["7-11t^2+4t^4", "-2t^2+2t^4"]),
    ((1, 0), "[1,1]", "[2]", &["1-7t^2+6t^4", "2t^4"]),
    ((1, 0), "[1,1]", "[1,1]", &["-2t^-2+3-3t^2+2t^4"]),
    ((-1, 0), "[2]", "[2]", &["-2t^-6+3t^-4-3t^-2+2"]),
    ((-1, 0), "[2]", "[1,1]", &["-6t^-6+7t^-4-t^-2", "-2t^-6"]),
    ((-1, 0), "[1,1]", "[2]", &["-4t^-6+11t^-4-7t^-2", "-2t^-6+2t^-4"]),
    ((-1, 0), "[1,1]", "[1,1]", &["-14t^-6+17t^-4-3t^-2", "-10t^-6+4t^-4", "-2t^-6"]),
    ((1, 1), "[2]", "[2]", &["9t^2-39t^4+30t^6", "-16t^4+34t^6", "-2t^4+14t^6", "2t^6"]),
    ((1, 1), "[2]", "[1,1]", &["3t^2-17t^4+14t^6", "-4t^4+10t^6", "2t^6"]),
    ((1, 1), "[1,1]", "[2]", &["3t^2-17t^4+14t^6", "-4t^4+10t^6", "2t^6"]),
    ((1, 1), "[1,1]", "[1,1]", &["t^2-7t^4+6t^6", "2t^6"]),
];

/// The twenty printed `ĥ_{B¹B²}` values for framed Hopf links.
pub fn hopf_hat_h() -> Vec<HatHCase> {
    let z2 = LaurentQT::z().pow(2);
    HAT_H
        .iter()
        .map(|&(writhe, a, b, rows)| {
            let mut sum = LaurentQT::zero();
            let mut zpow = LaurentQT::one();
            for r in rows {
                sum = &sum + &(&poly(r) * &zpow);
                zpow = &zpow * &z2;
            }
            let num = &poly("t^2-1") * &sum;
            HatHCase {
                writhe,
                labels: [a.parse().unwrap(), b.parse().unwrap()],
                value: RationalQT::new(num, z2.clone()).unwrap(),
            }
        })
        .collect()
}

/// The 5×5 determinant matrix printed for `λ = (4,2,2)`, `μ = (3,2)`.
pub fn determinant_matrix() -> (Partition, Partition, Vec<Vec<HEntry>>) {
    use HEntry::*;
    (
        "[4,2,2]".parse().unwrap(),
        "[3,2]".parse().unwrap(),
        vec![
            vec![HStar(2), HStar(1), One, Zero, Zero],
            vec![HStar(4), HStar(3), HStar(2), HStar(1), One],
            vec![H(2), H(3), H(4), H(5), H(6)],
            vec![Zero, One, H(1), H(2), H(3)],
            vec![Zero, Zero, One, H(1), H(2)],
        ],
    )
}
