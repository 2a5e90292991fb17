//! Named quivers used by tests, benches and the command line.
//!
//! Constructors take 0-based vertices; the comments give the 1-based arrows.

use crate::quiver::{Valuation, ValuedQuiver};

fn build(n: usize, arrows: &[(usize, usize, u64, u64)]) -> ValuedQuiver {
    ValuedQuiver::from_arrows(n, arrows).expect("fixture quivers are valid")
}

/// 1 -> 2 (1,1)
pub fn a2() -> ValuedQuiver {
    build(2, &[(0, 1, 1, 1)])
}

/// 1 -> 2 (1,2), d = (2,1)
pub fn b2() -> ValuedQuiver {
    build(2, &[(0, 1, 1, 2)])
}

/// 1 -> 2 (1,3), d = (3,1)
pub fn g2() -> ValuedQuiver {
    build(2, &[(0, 1, 1, 3)])
}

/// 1 -> 2 (2,2): rank two, weight four.
pub fn w4() -> ValuedQuiver {
    build(2, &[(0, 1, 2, 2)])
}

/// Linearly oriented `A_n`: 1 -> 2 -> ... -> n.
pub fn a_n(n: usize) -> ValuedQuiver {
    let arrows: Vec<_> = (1..n).map(|i| (i - 1, i, 1, 1)).collect();
    build(n, &arrows)
}

pub fn a3() -> ValuedQuiver {
    a_n(3)
}

/// 1 -> 2 -> 3 with the last arrow valued (1,2).
pub fn b3() -> ValuedQuiver {
    build(3, &[(0, 1, 1, 1), (1, 2, 1, 2)])
}

/// 1 -> 2 -> 3 with the last arrow valued (2,1).
pub fn c3() -> ValuedQuiver {
    build(3, &[(0, 1, 1, 1), (1, 2, 2, 1)])
}

/// 1 -> 2 <- 3, 2 -> 4: the star with centre 2.
pub fn d4() -> ValuedQuiver {
    build(4, &[(0, 1, 1, 1), (2, 1, 1, 1), (1, 3, 1, 1)])
}

/// 1 -> 2 -> 3 -> 4 with the middle arrow valued (1,2).
pub fn f4() -> ValuedQuiver {
    build(4, &[(0, 1, 1, 1), (1, 2, 1, 2), (2, 3, 1, 1)])
}

/// 1 -> 2 -> 3 -> 4 -> 5 with 3 -> 6.
pub fn e6() -> ValuedQuiver {
    build(
        6,
        &[
            (0, 1, 1, 1),
            (1, 2, 1, 1),
            (2, 3, 1, 1),
            (3, 4, 1, 1),
            (2, 5, 1, 1),
        ],
    )
}

/// `k` isolated vertices.
pub fn a1_power(k: usize) -> ValuedQuiver {
    build(k, &[])
}

/// Simply-laced oriented triangle 1 -> 2 -> 3 -> 1.
pub fn cycle3() -> ValuedQuiver {
    cycle3_weighted(1)
}

/// Oriented triangle with every arrow valued `(x,x)`; `x = 2` is the Markov
/// quiver.
pub fn cycle3_weighted(x: u64) -> ValuedQuiver {
    build(3, &[(0, 1, x, x), (1, 2, x, x), (2, 0, x, x)])
}

/// Seven-vertex quiver with arrows 3->4 (2,3), 3->2 (2,3), 2->1 (1,2),
/// 7->2 (2,1), 6->1 (1,1), 1->3 (6,2), 1->5 (2,3). Its minimal symmetrizer is
/// (3,6,9,6,2,3,3).
pub fn rank7() -> ValuedQuiver {
    build(
        7,
        &[
            (2, 3, 2, 3),
            (2, 1, 2, 3),
            (1, 0, 1, 2),
            (6, 1, 2, 1),
            (5, 0, 1, 1),
            (0, 2, 6, 2),
            (0, 4, 2, 3),
        ],
    )
}

/// Rank-3 weight-4 shapes, each an oriented triangle `1 -> 2 -> 3 -> 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight4Template {
    /// `(x,1)`, `(2,2)`, `(1,x)` for `x` in `1..=4`.
    Q31(u64),
    /// all three arrows `(2,2)`.
    Q32,
    /// `(2,1)`, `(1,4)`, `(2,1)`.
    Q33,
}

impl Weight4Template {
    pub const ALL: [Weight4Template; 6] = [
        Weight4Template::Q31(1),
        Weight4Template::Q31(2),
        Weight4Template::Q31(3),
        Weight4Template::Q31(4),
        Weight4Template::Q32,
        Weight4Template::Q33,
    ];

    pub fn quiver(self) -> ValuedQuiver {
        let vals = match self {
            Weight4Template::Q31(x) => [(x, 1), (2, 2), (1, x)],
            Weight4Template::Q32 => [(2, 2), (2, 2), (2, 2)],
            Weight4Template::Q33 => [(2, 1), (1, 4), (2, 1)],
        };
        ValuedQuiver::new(
            3,
            [(0, 1), (1, 2), (2, 0)]
                .into_iter()
                .zip(vals)
                .map(|((i, j), (a, b))| (i, j, Valuation::new(a, b))),
            None,
            [],
        )
        .expect("templates are skew-symmetrizable")
    }

    pub fn name(self) -> String {
        match self {
            Weight4Template::Q31(x) => format!("Q^{x}_3(1)"),
            Weight4Template::Q32 => "Q_3(2)".to_string(),
            Weight4Template::Q33 => "Q_3(3)".to_string(),
        }
    }
}

/// Builtin names accepted by the command line.
pub const BUILTIN_NAMES: &[&str] = &[
    "a1",
    "a2",
    "a3",
    "a4",
    "a5",
    "b2",
    "b3",
    "c3",
    "g2",
    "d4",
    "f4",
    "e6",
    "w4",
    "cycle3",
    "markov",
    "rank7",
];

/// Looks up a builtin quiver by name (case-insensitive).
pub fn builtin(name: &str) -> Option<ValuedQuiver> {
    let q = match name.to_ascii_lowercase().as_str() {
        "a1" => a_n(1),
        "a2" => a2(),
        "a3" => a3(),
        "a4" => a_n(4),
        "a5" => a_n(5),
        "b2" => b2(),
        "b3" => b3(),
        "c3" => c3(),
        "g2" => g2(),
        "d4" => d4(),
        "f4" => f4(),
        "e6" => e6(),
        "w4" => w4(),
        "cycle3" => cycle3(),
        "markov" => cycle3_weighted(2),
        "rank7" => rank7(),
        _ => return None,
    };
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_resolves() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_some(), "{name}");
        }
        assert!(builtin("e9").is_none());
    }

    #[test]
    fn template_weights() {
        for t in Weight4Template::ALL {
            assert_eq!(t.quiver().weight(), 4, "{}", t.name());
        }
    }
}
