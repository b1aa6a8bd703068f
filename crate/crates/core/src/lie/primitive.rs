use std::collections::HashMap;

use num_traits::Zero;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::{AlgebraElement, Word};

/// Largest weight [`is_primitive`] will inspect; splitting a weight-k word
/// costs 2^k.
pub const PRIMITIVITY_GUARD: usize = 5;

/// Friedrichs criterion: `x` is a Lie element iff every homogeneous weight
/// component is primitive for the graded unshuffle coproduct,
/// `Δ(x) = x⊗1 + 1⊗x`.
///
/// Generators are primitive and Δ is multiplicative for the Koszul-signed
/// tensor product, so a word splits into (left subword, right subword) over
/// all position subsets, with sign `(-1)` for every odd letter sent left past
/// an earlier odd letter sent right. Only the mixed part (both sides
/// nonempty) has to vanish. Weights above `wmax` are not inspected.
pub fn is_primitive(x: &AlgebraElement, wmax: usize) -> Result<bool> {
    if wmax > PRIMITIVITY_GUARD {
        return Err(Error::InvalidArgument(format!(
            "primitivity check limited to weight {PRIMITIVITY_GUARD}"
        )));
    }
    let ctx = x.context().clone();
    let wmax = wmax.min(ctx.max_weight());
    for k in 2..=wmax {
        let mut mixed: HashMap<(Word, Word), Rational> = HashMap::new();
        for (w, c) in x.terms().filter(|(w, _)| w.weight() == k) {
            let letters = w.letters();
            for mask in 1u32..(1 << k) - 1 {
                let mut left: SmallVec<[u8; 12]> = SmallVec::new();
                let mut right: SmallVec<[u8; 12]> = SmallVec::new();
                let mut odd_right = 0usize;
                let mut negative = false;
                for (i, &l) in letters.iter().enumerate() {
                    let odd = ctx.is_odd(l as usize);
                    if mask & (1 << i) != 0 {
                        if odd && odd_right % 2 == 1 {
                            negative = !negative;
                        }
                        left.push(l);
                    } else {
                        if odd {
                            odd_right += 1;
                        }
                        right.push(l);
                    }
                }
                let entry = mixed.entry((left.into(), right.into())).or_insert_with(Rational::zero);
                if negative {
                    *entry -= c;
                } else {
                    *entry += c;
                }
            }
        }
        if mixed.values().any(|v| !v.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{gen, AlgebraContext};
    use crate::scalar::int;

    #[test]
    fn generators_and_brackets_are_primitive() {
        let c = AlgebraContext::new(&[("a", -1), ("e", 0), ("f", 0), ("g", 1)], 6).unwrap();
        let names = ["a", "e", "f", "g"];
        let gens: Vec<_> = names.iter().map(|n| gen(&c, n).unwrap()).collect();
        assert!(is_primitive(&(&gens[1] + &gens[2]), 5).unwrap());
        for x in &gens {
            for y in &gens {
                let xy = x.bracket(y).unwrap();
                assert!(is_primitive(&xy, 5).unwrap(), "[{x},{y}]");
                for z in &gens {
                    let xyz = xy.bracket(z).unwrap();
                    assert!(is_primitive(&xyz, 5).unwrap(), "[[{x},{y}],{z}]");
                }
            }
        }
    }

    #[test]
    fn plain_words_are_not_primitive() {
        let c = AlgebraContext::new(&[("a", -1), ("e", 0), ("f", 0)], 6).unwrap();
        let ef = AlgebraElement::from_named(&c, &[("e f", int(1))]).unwrap();
        assert!(!is_primitive(&ef, 2).unwrap());
        // aa = ½[a,a] is primitive for odd a; ee is not.
        let aa = AlgebraElement::from_named(&c, &[("a a", int(1))]).unwrap();
        assert!(is_primitive(&aa, 2).unwrap());
        let ee = AlgebraElement::from_named(&c, &[("e e", int(1))]).unwrap();
        assert!(!is_primitive(&ee, 2).unwrap());
        // the weight guard ignores higher weights
        assert!(is_primitive(&ef, 1).unwrap());
        assert!(is_primitive(&ef, 6).is_err());
    }
}
