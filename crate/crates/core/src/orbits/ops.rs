use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::class::IsoClass;
use crate::dynkin::AdaptedWord;
use crate::error::{Error, Result};
use crate::field::{next_prime, PrimeField};
use crate::repkit::{extension_classes, RepKit, DEFAULT_MAX_EXT_BITS};

/// Default enumeration prime. Over `F_2` some middle terms of `E6`
/// extensions never occur (their count polynomial vanishes at `q = 2`).
pub const DEFAULT_OPS_PRIME: u64 = 5;

/// A non-split extension `0 → e_{α^s} → V → e_{α^t} → 0`, seen as the move
/// `c ↦ c + op` from the split class to the class of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryOp {
    pub s: usize,
    pub t: usize,
    pub middle: IsoClass,
    pub op: Vec<i64>,
    /// `e^Υ`, once computed by the counting layer.
    pub e_value: Option<i64>,
    pub regular: Option<bool>,
    /// Whether the `−1 / +1 / 0` case reading agrees with `op`.
    pub case_formula_agrees: bool,
}

impl ElementaryOp {
    pub fn new(s: usize, t: usize, middle: IsoClass) -> Self {
        let nu = middle.len();
        let mut op: Vec<i64> = middle.0.iter().map(|&x| i64::from(x)).collect();
        op[s] -= 1;
        op[t] -= 1;
        let case: Vec<i64> = (0..nu)
            .map(|r| {
                if r == s || r == t {
                    -1
                } else {
                    i64::from(middle.0[r] > 0)
                }
            })
            .collect();
        Self {
            s,
            t,
            case_formula_agrees: case == op,
            middle,
            op,
            e_value: None,
            regular: None,
        }
    }

    /// `c + op^Υ`, if it stays in `ℕ^ν`.
    pub fn apply(&self, c: &IsoClass) -> Option<IsoClass> {
        c.offset(&self.op)
    }
}

/// All elementary operations of the word, enumerated over `F_p` and
/// revalidated at the next prime.
pub fn elementary_ops(word: &AdaptedWord, p: u64) -> Result<Vec<ElementaryOp>> {
    elementary_ops_at(word, p, next_prime(p), DEFAULT_MAX_EXT_BITS)
}

pub fn elementary_ops_at(
    word: &AdaptedWord,
    p: u64,
    check_prime: u64,
    max_bits: u32,
) -> Result<Vec<ElementaryOp>> {
    let kit = RepKit::new(word, PrimeField::new(p)?)?;
    let check = RepKit::new(word, PrimeField::new(check_prime)?)?;
    let mut out = Vec::new();
    for s in 0..word.nu() {
        for t in 0..word.nu() {
            let middles = middle_set(&kit, s, t, max_bits)?;
            let again = middle_set(&check, s, t, max_bits)?;
            if middles != again {
                return Err(Error::Internal(format!(
                    "extensions of {} by {}: middle classes over F_{p} and F_{check_prime} differ",
                    t + 1,
                    s + 1
                )));
            }
            out.extend(middles.into_iter().map(|m| ElementaryOp::new(s, t, m)));
        }
    }
    Ok(out)
}

fn middle_set(kit: &RepKit<PrimeField>, s: usize, t: usize, max_bits: u32) -> Result<BTreeSet<IsoClass>> {
    Ok(extension_classes(kit, s, t, max_bits)?
        .into_iter()
        .map(|(c, _)| c)
        .collect())
}

/// `Op(c)`: the operations with `c + op^Υ ∈ ℕ^ν`.
pub fn ops_at<'a>(c: &IsoClass, ops: &'a [ElementaryOp]) -> Vec<&'a ElementaryOp> {
    ops.iter().filter(|u| u.apply(c).is_some()).collect()
}
