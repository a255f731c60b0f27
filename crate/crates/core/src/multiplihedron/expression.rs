//! Formal expressions `f(..)` over letters `a1..an`.
//!
//! An argument is either a word of domain factors, `f(a1(a2a3))`, or a list
//! of at least two single factors separated by dots, `f(a1.(a2a3))`. A word
//! made of one bracketed factor is written without that bracket. Products of
//! blocks form the codomain side; the outermost product carries no brackets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Atom(usize),
    Group(Vec<Factor>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Argument {
    Word(Vec<Factor>),
    Dotted(Vec<Factor>),
}

/// One `f(..)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub arg: Argument,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Block(Block),
    Product(Vec<Term>),
}

/// An element of the multiplihedron's expression poset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expression {
    pub root: Term,
}

/// A sequence of blocks with codomain brackets erased.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatExpression {
    pub blocks: Vec<Block>,
}

impl Factor {
    /// First and last letter covered.
    pub fn span(&self) -> (usize, usize) {
        match self {
            Factor::Atom(i) => (*i, *i),
            Factor::Group(items) => (items[0].span().0, items[items.len() - 1].span().1),
        }
    }
}

impl Block {
    /// Word argument with the redundant outer bracket of a lone group removed.
    pub fn word(factors: Vec<Factor>) -> Self {
        match <[Factor; 1]>::try_from(factors) {
            Ok([Factor::Group(items)]) => Block { arg: Argument::Word(items) },
            Ok([single]) => Block { arg: Argument::Word(vec![single]) },
            Err(factors) => Block { arg: Argument::Word(factors) },
        }
    }

    /// What the block puts in front of the dots when merged with its
    /// neighbours: its segments, its single letter, or its word as one group.
    pub fn segments(&self) -> Vec<Factor> {
        match &self.arg {
            Argument::Dotted(s) => s.clone(),
            Argument::Word(w) if w.len() == 1 => w.clone(),
            Argument::Word(w) => vec![Factor::Group(w.clone())],
        }
    }

    /// The block `f(s1. .. .sk)` obtained by merging `blocks` across dots.
    pub fn merged<'a>(blocks: impl IntoIterator<Item = &'a Block>) -> Block {
        Block { arg: Argument::Dotted(blocks.into_iter().flat_map(Block::segments).collect()) }
    }
}

impl Expression {
    pub fn block(arg: Argument) -> Self {
        Self { root: Term::Block(Block { arg }) }
    }

    /// Blocks from left to right, ignoring codomain brackets.
    pub fn blocks(&self) -> Vec<&Block> {
        fn walk<'a>(t: &'a Term, out: &mut Vec<&'a Block>) {
            match t {
                Term::Block(b) => out.push(b),
                Term::Product(items) => items.iter().for_each(|i| walk(i, out)),
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }

    /// I: one block without dots; II: one block with dots; III: several blocks.
    pub fn expression_type(&self) -> u8 {
        match &self.root {
            Term::Block(Block { arg: Argument::Word(_) }) => 1,
            Term::Block(_) => 2,
            Term::Product(_) => 3,
        }
    }
}

/// Erases all codomain brackets.
pub fn collapse_codomain(e: &Expression) -> FlatExpression {
    FlatExpression { blocks: e.blocks().into_iter().cloned().collect() }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Atom(i) => write!(f, "a{i}"),
            Factor::Group(items) => {
                f.write_str("(")?;
                items.iter().try_for_each(|x| write!(f, "{x}"))?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("f(")?;
        match &self.arg {
            Argument::Word(w) => w.iter().try_for_each(|x| write!(f, "{x}"))?,
            Argument::Dotted(s) => {
                for (i, x) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(".")?;
                    }
                    write!(f, "{x}")?;
                }
            }
        }
        f.write_str(")")
    }
}

fn write_term(t: &Term, outer: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Block(b) => write!(f, "{b}"),
        Term::Product(items) => {
            if !outer {
                f.write_str("(")?;
            }
            items.iter().try_for_each(|i| write_term(i, false, f))?;
            if !outer {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(&self.root, true, f)
    }
}

impl fmt::Display for FlatExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.blocks.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    letters: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self { input, bytes: input.as_bytes(), pos: 0, letters: 0 }
    }

    fn err(&self, reason: impl Into<String>) -> ModelError {
        ModelError::parse("expression", self.input, format!("{} at byte {}", reason.into(), self.pos))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ModelError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn terms(&mut self, nested: bool) -> Result<Vec<Term>, ModelError> {
        let mut items = Vec::new();
        loop {
            match self.peek() {
                Some(b'f') => items.push(Term::Block(self.block()?)),
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.terms(true)?;
                    self.expect(b')')?;
                    items.push(match <[Term; 1]>::try_from(inner) {
                        Ok([single]) => single,
                        Err(many) => Term::Product(many),
                    });
                }
                Some(b')') if nested => break,
                None if !nested => break,
                _ => return Err(self.err("expected 'f(' or '('")),
            }
        }
        if items.is_empty() {
            return Err(self.err("empty product"));
        }
        Ok(items)
    }

    fn block(&mut self) -> Result<Block, ModelError> {
        self.expect(b'f')?;
        self.expect(b'(')?;
        let mut segments = vec![self.factors()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            segments.push(self.factors()?);
        }
        self.expect(b')')?;
        if segments.len() == 1 {
            return Ok(Block::word(segments.pop().expect("one segment")));
        }
        let mut dotted = Vec::with_capacity(segments.len());
        for seg in segments {
            match <[Factor; 1]>::try_from(seg) {
                Ok([x]) => dotted.push(x),
                Err(_) => return Err(self.err("a dot separates single factors; bracket longer segments")),
            }
        }
        Ok(Block { arg: Argument::Dotted(dotted) })
    }

    fn factors(&mut self) -> Result<Vec<Factor>, ModelError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            match c {
                b'a' => {
                    self.pos += 1;
                    let start = self.pos;
                    while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        self.pos += 1;
                    }
                    let k: usize = self.input[start..self.pos].parse().map_err(|_| self.err("letter without index"))?;
                    if k != self.letters + 1 {
                        return Err(self.err(format!("expected a{} but found a{k}", self.letters + 1)));
                    }
                    self.letters = k;
                    out.push(Factor::Atom(k));
                }
                b'(' => {
                    self.pos += 1;
                    let inner = self.factors()?;
                    self.expect(b')')?;
                    out.push(match <[Factor; 1]>::try_from(inner) {
                        Ok([single]) => single,
                        Err(many) => Factor::Group(many),
                    });
                }
                _ => break,
            }
        }
        if out.is_empty() {
            return Err(self.err("expected a letter or '('"));
        }
        Ok(out)
    }
}

impl FromStr for Expression {
    type Err = ModelError;

    /// Parses text such as `f(a1a2)(f(a3)f(a4.a5))`; redundant brackets are
    /// dropped.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(input);
        let items = p.terms(false)?;
        let root = match <[Term; 1]>::try_from(items) {
            Ok([single]) => single,
            Err(many) => Term::Product(many),
        };
        Ok(Expression { root })
    }
}

impl FromStr for FlatExpression {
    type Err = ModelError;

    /// Parses a juxtaposition of blocks; codomain brackets are rejected.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(input);
        let mut blocks = Vec::new();
        while p.peek().is_some() {
            if p.peek() != Some(b'f') {
                return Err(p.err("expected 'f(' (codomain brackets are not allowed here)"));
            }
            blocks.push(p.block()?);
        }
        if blocks.is_empty() {
            return Err(p.err("empty expression"));
        }
        Ok(FlatExpression { blocks })
    }
}

/// Generators of every value family over letter ranges, memoized by range.
struct Grammar {
    factors: BTreeMap<(usize, usize), Vec<Factor>>,
    terms: BTreeMap<(usize, usize), Vec<Term>>,
}

/// Ways to cut `lo..=hi` into at least `min_parts` consecutive pieces,
/// each filled by `item`.
fn splits<T: Clone>(
    lo: usize,
    hi: usize,
    min_parts: usize,
    item: &mut dyn FnMut(usize, usize) -> Vec<T>,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for end in lo..=hi {
        if end == hi {
            if min_parts <= 1 {
                out.extend(item(lo, end).into_iter().map(|h| vec![h]));
            }
            continue;
        }
        let heads = item(lo, end);
        let tails = splits(end + 1, hi, min_parts.saturating_sub(1), item);
        for h in &heads {
            for t in &tails {
                let mut v = Vec::with_capacity(t.len() + 1);
                v.push(h.clone());
                v.extend(t.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

impl Grammar {
    fn new() -> Self {
        Self { factors: BTreeMap::new(), terms: BTreeMap::new() }
    }

    fn factors(&mut self, lo: usize, hi: usize) -> Vec<Factor> {
        if let Some(v) = self.factors.get(&(lo, hi)) {
            return v.clone();
        }
        let v = if lo == hi {
            vec![Factor::Atom(lo)]
        } else {
            splits(lo, hi, 2, &mut |a, b| self.factors(a, b)).into_iter().map(Factor::Group).collect()
        };
        self.factors.insert((lo, hi), v.clone());
        v
    }

    fn blocks(&mut self, lo: usize, hi: usize) -> Vec<Block> {
        let seqs = splits(lo, hi, 1, &mut |a, b| self.factors(a, b));
        let mut out = Vec::new();
        for s in seqs {
            if s.len() >= 2 {
                out.push(Block { arg: Argument::Dotted(s.clone()) });
                out.push(Block { arg: Argument::Word(s) });
            } else if let Factor::Atom(_) = s[0] {
                out.push(Block { arg: Argument::Word(s) });
            }
        }
        out
    }

    fn terms(&mut self, lo: usize, hi: usize) -> Vec<Term> {
        if let Some(v) = self.terms.get(&(lo, hi)) {
            return v.clone();
        }
        let mut v: Vec<Term> = self.blocks(lo, hi).into_iter().map(Term::Block).collect();
        v.extend(splits(lo, hi, 2, &mut |a, b| self.terms(a, b)).into_iter().map(Term::Product));
        self.terms.insert((lo, hi), v.clone());
        v
    }
}

/// Every expression over `a1..an`.
pub fn enumerate_expressions(n: usize) -> Result<Vec<Expression>, ModelError> {
    ModelError::too_small("expression enumeration", n, 1)?;
    Ok(Grammar::new().terms(1, n).into_iter().map(|root| Expression { root }).collect())
}

/// Every flat expression over `a1..an`.
pub fn enumerate_flat_expressions(n: usize) -> Result<Vec<FlatExpression>, ModelError> {
    ModelError::too_small("flat expression enumeration", n, 1)?;
    let mut g = Grammar::new();
    Ok(splits(1, n, 1, &mut |a, b| g.blocks(a, b)).into_iter().map(|blocks| FlatExpression { blocks }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn round_trip_text() {
        for s in ["f(a1a2)(f(a3)f(a4.a5))", "f(a1.a2.a3)", "f(a1)", "(f(a1)f(a2a3))f(a4)", "f(a1.(a2(a3a4)))"] {
            assert_eq!(s.parse::<Expression>().unwrap().to_string(), s);
        }
        assert_eq!("f((a1a2))".parse::<Expression>().unwrap().to_string(), "f(a1a2)");
        assert_eq!("f(a1)f(a2a3)".parse::<FlatExpression>().unwrap().to_string(), "f(a1)f(a2a3)");
        for bad in ["f(a1a2.a3)", "f(a2)", "g(a1)", "f(a1", "(f(a1)f(a2)"] {
            assert!(bad.parse::<Expression>().is_err(), "{bad}");
        }
        assert!("(f(a1)f(a2))f(a3)".parse::<FlatExpression>().is_err());
    }

    #[test]
    fn types() {
        let t = |s: &str| s.parse::<Expression>().unwrap().expression_type();
        assert_eq!((t("f(a1a2)"), t("f(a1.a2)"), t("f(a1)f(a2)")), (1, 2, 3));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| enumerate_expressions(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 3, 13]);
        let flat: Vec<usize> = (1..=4).map(|n| enumerate_flat_expressions(n).unwrap().len()).collect();
        assert_eq!(flat, [1, 3, 11, 45]);
    }

    #[test]
    fn codomain_collapse() {
        let e: Expression = "(f(a1)f(a2a3))f(a4)".parse().unwrap();
        assert_eq!(collapse_codomain(&e).to_string(), "f(a1)f(a2a3)f(a4)");
        let a = collapse_codomain(&"(f(a1)f(a2))f(a3)".parse().unwrap());
        let b = collapse_codomain(&"f(a1)(f(a2)f(a3))".parse().unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn merging_blocks() {
        let f = |s: &str| s.parse::<FlatExpression>().unwrap().blocks;
        let blocks = f("f(a1)f(a2a3)f(a4.a5)");
        assert_eq!(Block::merged(&blocks).to_string(), "f(a1.(a2a3).a4.a5)");
    }
}
