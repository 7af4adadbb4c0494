//! Greedy prefix-reversal sorting of unsigned and burnt (signed) stacks.
//!
//! Each pass brings the largest unplaced pancake to the top and flips it
//! into place. Burnt pancakes may need one extra `r_1` so that the final
//! flip lands them face up.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext, GroupType, SignedPermutation, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortCertificate {
    pub input: SignedPermutation,
    pub word: Word,
    pub flip_count: usize,
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    input: String,
    word: Vec<String>,
    flip_count: usize,
}

impl SortCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CertificateDoc {
            input: self.input.to_string(),
            word: self.word.tokens(),
            flip_count: self.flip_count,
        })
        .expect("certificate serializes")
    }

    pub fn from_json(text: &str, ctx: GroupContext) -> Result<Self> {
        let doc: CertificateDoc = serde_json::from_str(text)?;
        Ok(Self {
            input: doc.input.parse()?,
            word: Word::from_tokens(ctx, &doc.word)?,
            flip_count: doc.flip_count,
        })
    }
}

/// Largest flip count the greedy sorter can use on a stack of `n`.
pub fn greedy_bound(ctx: GroupContext) -> usize {
    let n = ctx.degree();
    match ctx.group_type() {
        GroupType::A => 2 * n.saturating_sub(1),
        _ => 3 * n,
    }
}

pub fn greedy_sort(p: &SignedPermutation, ctx: GroupContext) -> Result<SortCertificate> {
    if p.degree() != ctx.degree() {
        return Err(Error::DegreeMismatch {
            expected: ctx.degree(),
            found: p.degree(),
        });
    }
    let signed = match ctx.group_type() {
        GroupType::A => {
            if let Some(&x) = p.window().iter().find(|&&x| x < 0) {
                return Err(Error::SignedEntryInTypeA(x));
            }
            false
        }
        GroupType::B => true,
        GroupType::D => return Err(Error::InvalidContext(ctx)),
    };

    let mut stack = p.window().to_vec();
    let mut flips = Vec::new();
    let mut flip = |k: usize, stack: &mut Vec<i32>| {
        let g = Generator::R(k as u32);
        ctx.flip_in_place(g, stack);
        flips.push(g);
    };
    for m in (1..=ctx.degree()).rev() {
        let target = m as i32;
        if stack[m - 1] == target {
            continue;
        }
        let pos = stack[..m]
            .iter()
            .position(|&x| x.abs() == target)
            .expect("unplaced value lies in the prefix");
        if !signed {
            if pos > 0 {
                flip(pos + 1, &mut stack);
            }
            flip(m, &mut stack);
        } else {
            if pos > 0 {
                flip(pos + 1, &mut stack);
            }
            // The final flip negates, so the top must be face down.
            if stack[0] > 0 {
                flip(1, &mut stack);
            }
            flip(m, &mut stack);
        }
    }
    debug_assert!(stack.iter().enumerate().all(|(i, &x)| x == i as i32 + 1));
    let flip_count = flips.len();
    Ok(SortCertificate {
        input: p.clone(),
        word: Word::new(ctx, flips)?,
        flip_count,
    })
}

/// True iff performing the certificate's flips on its input sorts it.
pub fn verify_certificate(c: &SortCertificate, ctx: GroupContext) -> bool {
    if c.input.degree() != ctx.degree() || c.word.context() != ctx || c.word.len() != c.flip_count {
        return false;
    }
    if c.word
        .symbols()
        .iter()
        .any(|g| !matches!(g, Generator::R(_)))
    {
        return false;
    }
    let mut stack = c.input.window().to_vec();
    for &g in c.word.symbols() {
        ctx.flip_in_place(g, &mut stack);
    }
    stack.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(t: GroupType, n: usize) -> GroupContext {
        GroupContext::new(t, n).unwrap()
    }

    fn perm(w: &[i32]) -> SignedPermutation {
        SignedPermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        let a3 = ctx(GroupType::A, 3);
        let c = greedy_sort(&perm(&[3, 1, 2]), a3).unwrap();
        assert_eq!(c.word.to_string(), "r3 r2");
        assert_eq!(c.flip_count, 2);
        assert!(verify_certificate(&c, a3));

        let c = greedy_sort(&a3.identity(), a3).unwrap();
        assert!(c.word.is_empty());
        assert_eq!(c.flip_count, 0);

        let b3 = ctx(GroupType::B, 3);
        let c = greedy_sort(&perm(&[-1, 2, 3]), b3).unwrap();
        assert_eq!(c.word.to_string(), "r1");
        assert_eq!(c.flip_count, 1);
        assert!(verify_certificate(&c, b3));
    }

    #[test]
    fn rejected_inputs() {
        assert!(matches!(
            greedy_sort(&perm(&[1, 2, 3, 4]), ctx(GroupType::D, 4)),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            greedy_sort(&perm(&[-1, 2, 3]), ctx(GroupType::A, 3)),
            Err(Error::SignedEntryInTypeA(-1))
        ));
        assert!(greedy_sort(&perm(&[1, 2]), ctx(GroupType::A, 3)).is_err());
    }

    #[test]
    fn tampered_certificates_fail() {
        let a4 = ctx(GroupType::A, 4);
        let c = greedy_sort(&perm(&[2, 4, 1, 3]), a4).unwrap();
        assert!(verify_certificate(&c, a4));
        let mut truncated = c.clone();
        let mut symbols = c.word.symbols().to_vec();
        symbols.pop();
        truncated.word = Word::new(a4, symbols).unwrap();
        truncated.flip_count -= 1;
        assert!(!verify_certificate(&truncated, a4));

        let empty = SortCertificate {
            input: perm(&[2, 1, 3, 4]),
            word: Word::empty(a4),
            flip_count: 0,
        };
        assert!(!verify_certificate(&empty, a4));
    }

    #[test]
    fn certificate_json() {
        let b4 = ctx(GroupType::B, 4);
        let c = greedy_sort(&perm(&[3, -1, 4, -2]), b4).unwrap();
        let back = SortCertificate::from_json(&c.to_json(), b4).unwrap();
        assert_eq!(back, c);
    }
}
