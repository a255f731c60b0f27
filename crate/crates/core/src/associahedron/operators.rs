//! Face inclusions `K_p x K_q -> K_(p+q-1)` and degeneracies `K_n -> K_(n-1)`
//! on bracketings, with exhaustive checks of the relations between them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::bracketing::{enumerate_bracketings, Bracketing};
use crate::error::ModelError;
use crate::report::Report;

/// Substitutes `inner` for letter `k` of `outer`: brackets of `outer` that
/// span slot `k` widen by `q - 1`, later letters shift, the block
/// `[k, k + q - 1]` is bracketed and `inner` is shifted by `k - 1`.
pub fn embed(outer: &Bracketing, k: usize, inner: &Bracketing) -> Result<Bracketing, ModelError> {
    let (p, q) = (outer.letters(), inner.letters());
    if k == 0 || k > p {
        return Err(ModelError::OutOfRange { index: k, max: p });
    }
    let grow = q - 1;
    let shift = |x: usize| if x > k { x + grow } else { x };
    let mut brackets: BTreeSet<(usize, usize)> =
        outer.brackets().iter().map(|&(l, r)| (shift(l), if r >= k { r + grow } else { r })).collect();
    if (k, k + grow) != (1, p + grow) && grow > 0 {
        brackets.insert((k, k + grow));
    }
    brackets.extend(inner.brackets().iter().map(|&(l, r)| (l + k - 1, r + k - 1)));
    Bracketing::new(p + grow, brackets)
}

/// Deletes letter `j`, dropping brackets that shrink to one letter or to the
/// whole word.
pub fn degeneracy(b: &Bracketing, j: usize) -> Result<Bracketing, ModelError> {
    let n = b.letters();
    ModelError::too_small("degeneracy", n, 3)?;
    if j == 0 || j > n {
        return Err(ModelError::OutOfRange { index: j, max: n });
    }
    Ok(delete_letter(b, j))
}

pub(crate) fn delete_letter(b: &Bracketing, j: usize) -> Bracketing {
    let m = b.letters() - 1;
    let brackets = b
        .brackets()
        .iter()
        .map(|&(l, r)| (if l > j { l - 1 } else { l }, if r >= j { r - 1 } else { r }))
        .filter(|&(l, r)| l < r && (l, r) != (1, m))
        .collect();
    Bracketing::from_parts(m, brackets)
}

fn faces_by_size(max: usize) -> Vec<Vec<Bracketing>> {
    (0..=max).map(|n| if n < 2 { Vec::new() } else { enumerate_bracketings(n).expect("n >= 2") }).collect()
}

/// Both composition identities for substitution, on every triple of factors
/// with at most `max_letters` letters in the result:
///
/// * `embed(embed(o, j, m), j + k - 1, i) = embed(o, j, embed(m, k, i))`
/// * for `j > k`: `embed(embed(o, k, s), j + |s| - 1, t) = embed(embed(o, j, t), k, s)`
pub fn verify_embed_identities(max_letters: usize) -> Report {
    let mut report = Report::new("substitution identities");
    let faces = faces_by_size(max_letters);
    let (mut nested, mut disjoint) = (0, 0);
    for r in 2..=max_letters {
        for s in 2..=max_letters {
            for t in 2..=max_letters {
                if r + s + t - 2 > max_letters {
                    continue;
                }
                for o in &faces[r] {
                    for m in &faces[s] {
                        for i in &faces[t] {
                            for j in 1..=r {
                                for k in 1..=s {
                                    let lhs = embed(&embed(o, j, m).unwrap(), j + k - 1, i).unwrap();
                                    let rhs = embed(o, j, &embed(m, k, i).unwrap()).unwrap();
                                    nested += 1;
                                    report.require(lhs == rhs, || {
                                        format!("nested: o={o} j={j} m={m} k={k} i={i}: {lhs} vs {rhs}")
                                    });
                                }
                            }
                            // Here `m` plays `s` and `i` plays `t`.
                            for j in 1..=r {
                                for k in 1..j {
                                    let lhs = embed(&embed(o, k, m).unwrap(), j + s - 1, i).unwrap();
                                    let rhs = embed(&embed(o, j, i).unwrap(), k, m).unwrap();
                                    disjoint += 1;
                                    report.require(lhs == rhs, || {
                                        format!("disjoint: o={o} k={k} s={m} j={j} t={i}: {lhs} vs {rhs}")
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.count("nested cases", nested).count("disjoint cases", disjoint);
    report
}

/// Degeneracy relations on all faces with at most `max_letters` letters:
///
/// 1. `s_j s_k = s_k s_(j+1)` for `k <= j`;
/// 2. `s_j embed(o, k, i) = embed(s_j o, k - 1, i)` for `j < k`, `|o| > 2`;
/// 3. `s_j embed(o, k, i) = embed(o, k, s_(j-k+1) i)` for `|i| > 2`, `k <= j < k + |i|`,
///    and the projection cases where a two-letter factor is deleted;
/// 4. `s_j embed(o, k, i) = embed(s_(j-|i|+1) o, k, i)` for `k + |i| <= j`.
///
/// A projection is read as returning the bracketing of the surviving factor;
/// the projection cases cover every degeneracy that deletes a two-letter
/// factor, including the ones at the ends of the word.
pub fn verify_degeneracy_relations(max_letters: usize) -> Report {
    let mut report = Report::new("degeneracy relations");
    report.note("projections onto a factor are read as returning that factor's bracketing");
    let faces = faces_by_size(max_letters);
    let mut counts = [0usize; 4];
    for (n, level) in faces.iter().enumerate().skip(4) {
        for b in level {
            for j in 1..n {
                for k in 1..=j {
                    let lhs = delete_letter(&delete_letter(b, k), j);
                    let rhs = delete_letter(&delete_letter(b, j + 1), k);
                    counts[0] += 1;
                    report.require(lhs == rhs, || format!("s{j}s{k} vs s{k}s{}: {b} gives {lhs} and {rhs}", j + 1));
                }
            }
        }
    }
    for r in 2..=max_letters {
        for s in 2..=max_letters {
            let n = r + s - 1;
            if n > max_letters || n < 3 {
                continue;
            }
            for o in &faces[r] {
                for i in &faces[s] {
                    for k in 1..=r {
                        let e = embed(o, k, i).unwrap();
                        for j in 1..=n {
                            let lhs = delete_letter(&e, j);
                            // With a two-letter outer factor, relations 2 and 4 become
                            // the projection onto the inner factor.
                            let rhs = if j < k {
                                counts[1] += 1;
                                if r > 2 {
                                    embed(&delete_letter(o, j), k - 1, i).unwrap()
                                } else {
                                    i.clone()
                                }
                            } else if j < k + s {
                                counts[2] += 1;
                                if s > 2 {
                                    embed(o, k, &delete_letter(i, j - k + 1)).unwrap()
                                } else {
                                    o.clone()
                                }
                            } else {
                                counts[3] += 1;
                                if r > 2 {
                                    embed(&delete_letter(o, j - s + 1), k, i).unwrap()
                                } else {
                                    i.clone()
                                }
                            };
                            report.require(lhs == rhs, || {
                                format!("s{j} after embed(o={o}, k={k}, i={i}) = {lhs}, relation gives {rhs}")
                            });
                        }
                    }
                }
            }
        }
    }
    for (i, c) in counts.iter().enumerate() {
        report.count(format!("relation {}", i + 1), *c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn b(s: &str) -> Bracketing {
        s.parse().unwrap()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&Bracketing::empty(3), 2, &Bracketing::empty(2)).unwrap().to_string(), "a1(a2a3)a4");
        assert_eq!(embed(&b("(a1a2)a3"), 1, &b("a1a2")).unwrap().to_string(), "((a1a2)a3)a4");
        assert_eq!(embed(&b("(a1a2)a3"), 3, &b("a1(a2a3)")).unwrap().to_string(), "(a1a2)(a3(a4a5))");
        assert!(embed(&Bracketing::empty(3), 4, &Bracketing::empty(2)).is_err());
    }

    #[test]
    fn embed_adds_dimensions() {
        let (o, i) = (b("a1a2a3a4"), b("a1(a2a3)"));
        for k in 1..=4 {
            let e = embed(&o, k, &i).unwrap();
            assert_eq!(e.dimension(), o.dimension() + i.dimension());
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&b("a1(a2a3)a4"), 1).unwrap().to_string(), "(a1a2)a3");
        assert_eq!(degeneracy(&b("a1(a2a3)a4"), 2).unwrap().to_string(), "a1a2a3");
        assert_eq!(degeneracy(&Bracketing::empty(5), 3).unwrap(), Bracketing::empty(4));
        assert!(degeneracy(&Bracketing::empty(4), 5).is_err());
        assert!(degeneracy(&Bracketing::empty(2), 1).is_err());
    }

    #[test]
    fn identities_small() {
        let r = verify_embed_identities(6);
        assert!(r.pass, "{r}");
        let r = verify_degeneracy_relations(5);
        assert!(r.pass, "{r}");
    }
}
