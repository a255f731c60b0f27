use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ModelError;
use crate::poset::FacePoset;

/// A set of pairwise nested-or-disjoint brackets `[l, r]` on letters
/// `a1..an`, excluding single letters and the whole word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracketing {
    n: usize,
    brackets: BTreeSet<(usize, usize)>,
}

pub(crate) fn crossing(a: (usize, usize), b: (usize, usize)) -> bool {
    let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
    let disjoint = a.1 < b.0 || b.1 < a.0;
    !nested && !disjoint
}

impl Bracketing {
    pub fn new(n: usize, brackets: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, ModelError> {
        let brackets: BTreeSet<(usize, usize)> = brackets.into_iter().collect();
        for &(l, r) in &brackets {
            if l < 1 || r > n || l >= r || (l, r) == (1, n) {
                return Err(ModelError::invalid("bracketing", format!("bracket [{l},{r}] on {n} letters")));
            }
        }
        for &a in &brackets {
            if let Some(&b) = brackets.iter().find(|&&b| crossing(a, b)) {
                return Err(ModelError::invalid(
                    "bracketing",
                    format!("brackets [{},{}] and [{},{}] cross", a.0, a.1, b.0, b.1),
                ));
            }
        }
        Ok(Self { n, brackets })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, brackets: BTreeSet::new() }
    }

    /// `a1(a2(..(a(n-1)an)..))`.
    pub fn right_comb(n: usize) -> Self {
        Self { n, brackets: (2..n).map(|k| (k, n)).collect() }
    }

    /// `((..(a1a2)..)a(n-1))an`.
    pub fn left_comb(n: usize) -> Self {
        Self { n, brackets: (2..n).map(|k| (1, k)).collect() }
    }

    pub fn letters(&self) -> usize {
        self.n
    }

    pub fn brackets(&self) -> &BTreeSet<(usize, usize)> {
        &self.brackets
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `n - 2 - |brackets|`; zero on vertices.
    pub fn dimension(&self) -> usize {
        self.n - 2 - self.brackets.len()
    }

    pub fn contains(&self, bracket: (usize, usize)) -> bool {
        self.brackets.contains(&bracket)
    }

    /// Face order: `self <= other` iff `self` has every bracket of `other`.
    pub fn refines(&self, other: &Bracketing) -> bool {
        self.n == other.n && other.brackets.is_subset(&self.brackets)
    }

    pub(crate) fn from_parts(n: usize, brackets: BTreeSet<(usize, usize)>) -> Self {
        Self { n, brackets }
    }

    pub(crate) fn without(&self, bracket: (usize, usize)) -> Self {
        let mut brackets = self.brackets.clone();
        brackets.remove(&bracket);
        Self { n: self.n, brackets }
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            for _ in self.brackets.iter().filter(|b| b.0 == i) {
                f.write_str("(")?;
            }
            write!(f, "a{i}")?;
            for _ in self.brackets.iter().filter(|b| b.1 == i) {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Bracketing {
    type Err = ModelError;

    /// Parses the canonical form, e.g. `a1(a2a3)a4`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| ModelError::parse("bracketing", input, reason);
        let mut open: Vec<usize> = Vec::new();
        let mut brackets = Vec::new();
        let mut letters = 0;
        let mut chars = input.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '(' => open.push(letters + 1),
                ')' => {
                    let l = open.pop().ok_or_else(|| err("unbalanced ')'".into()))?;
                    if l >= letters {
                        return Err(err(format!(
                            "bracket closing at letter {letters} encloses fewer than two letters"
                        )));
                    }
                    brackets.push((l, letters));
                }
                'a' => {
                    let mut digits = String::new();
                    while let Some(d) = chars.next_if(char::is_ascii_digit) {
                        digits.push(d);
                    }
                    let k: usize = digits.parse().map_err(|_| err("letter without index".into()))?;
                    if k != letters + 1 {
                        return Err(err(format!("expected a{} but found a{k}", letters + 1)));
                    }
                    letters = k;
                }
                c if c.is_whitespace() => {}
                c => return Err(err(format!("unexpected character {c:?}"))),
            }
        }
        if !open.is_empty() {
            return Err(err("unbalanced '('".into()));
        }
        let unique: BTreeSet<_> = brackets.iter().copied().collect();
        if unique.len() != brackets.len() {
            return Err(err("repeated bracket".into()));
        }
        Bracketing::new(letters, brackets).map_err(|e| err(format!("{e}")))
    }
}

/// All bracketings of `n` letters, in canonical label order.
pub fn enumerate_bracketings(n: usize) -> Result<Vec<Bracketing>, ModelError> {
    ModelError::too_small("bracketing enumeration", n, 2)?;
    let intervals: Vec<(usize, usize)> =
        (1..n).flat_map(|l| (l + 1..=n).map(move |r| (l, r))).filter(|&b| b != (1, n)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        i: usize,
        intervals: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Bracketing>,
    ) {
        if i == intervals.len() {
            out.push(Bracketing::from_parts(n, chosen.iter().copied().collect()));
            return;
        }
        go(i + 1, intervals, chosen, n, out);
        let b = intervals[i];
        if chosen.iter().all(|&c| !crossing(b, c)) {
            chosen.push(b);
            go(i + 1, intervals, chosen, n, out);
            chosen.pop();
        }
    }
    go(0, &intervals, &mut chosen, n, &mut out);
    Ok(out)
}

/// The face poset of the associahedron on `n` letters: bracketings ordered by
/// reverse inclusion, rank `n - 2 - |B|`, top the empty bracketing.
pub fn build_k(n: usize) -> Result<FacePoset, ModelError> {
    let all = enumerate_bracketings(n)?;
    let index: BTreeMap<&Bracketing, usize> = all.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut pairs = Vec::new();
    for (i, b) in all.iter().enumerate() {
        for &br in b.brackets() {
            pairs.push((i, index[&b.without(br)]));
        }
    }
    let labels = all.iter().map(|b| format!("{b}")).collect();
    let ranks: Vec<usize> = all.iter().map(Bracketing::dimension).collect();
    Ok(FacePoset::with_ranks(labels, &ranks, &pairs)?)
}

/// `(p, q, r)` of the facet `K_p x_r K_q` carrying the bracket `[r, r + q - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetSignature {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

pub fn facet_signature(b: &Bracketing) -> Result<FacetSignature, ModelError> {
    let [(l, m)] = b.brackets().iter().copied().collect::<Vec<_>>()[..] else {
        return Err(ModelError::invalid("facet", format!("{b} has {} brackets, not one", b.len())));
    };
    Ok(FacetSignature { p: b.letters() - (m - l), q: m - l + 1, r: l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn print_and_parse() {
        let b = Bracketing::new(4, [(2, 3)]).unwrap();
        assert_eq!(b.to_string(), "a1(a2a3)a4");
        assert_eq!("a1(a2a3)a4".parse::<Bracketing>().unwrap(), b);
        let nested: Bracketing = "((a1a2)a3)a4".parse().unwrap();
        assert_eq!(nested.brackets().iter().copied().collect::<Vec<_>>(), [(1, 2), (1, 3)]);
        assert_eq!(nested.to_string(), "((a1a2)a3)a4");
        for bad in ["(a1a2)", "a1(a2)a3", "a2a1", "((a1a2))a3", "a1(a2a3", "a1b2"] {
            assert!(bad.parse::<Bracketing>().is_err(), "{bad}");
        }
    }

    #[test]
    fn crossing_brackets_rejected() {
        assert!(Bracketing::new(4, [(1, 2), (2, 3)]).is_err());
        assert!(Bracketing::new(4, [(1, 4)]).is_err());
    }

    #[test]
    fn small_associahedra() {
        assert_eq!(build_k(2).unwrap().f_vector(), vec![1]);
        assert_eq!(build_k(3).unwrap().f_vector(), vec![2, 1]);
        assert_eq!(build_k(4).unwrap().f_vector(), vec![5, 5, 1]);
        assert_eq!(build_k(5).unwrap().f_vector(), vec![14, 21, 9, 1]);
        assert!(build_k(1).is_err());
    }

    #[test]
    fn signatures() {
        let sig = |n, l, r| facet_signature(&Bracketing::new(n, [(l, r)]).unwrap()).unwrap();
        assert_eq!(sig(4, 2, 3), FacetSignature { p: 3, q: 2, r: 2 });
        assert_eq!(sig(4, 1, 3), FacetSignature { p: 2, q: 3, r: 1 });
        assert_eq!(sig(5, 3, 5), FacetSignature { p: 3, q: 3, r: 3 });
        assert!(facet_signature(&Bracketing::empty(4)).is_err());
    }

    #[test]
    fn combs() {
        assert_eq!(Bracketing::right_comb(5).to_string(), "a1(a2(a3(a4a5)))");
        assert_eq!(Bracketing::left_comb(4).to_string(), "((a1a2)a3)a4");
        assert_eq!(Bracketing::right_comb(2).to_string(), "a1a2");
    }
}
