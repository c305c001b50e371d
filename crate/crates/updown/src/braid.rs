//! Words over the crossing alphabet of braid diagrams: parsing and
//! formatting, the monoid product, strand permutations, and bigon
//! (reducibility) analysis.
//!
//! A word lists crossings from the top of the diagram to the bottom. Every
//! letter carries a 1-based column index `i` and acts on the adjacent
//! columns `i` and `i + 1`. The empty word of degree `n` is the identity
//! diagram on `n` strands.

use std::fmt;

use crate::{Error, Result};

/// The three crossing types that may occur between adjacent columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// `s<i>`: classical crossing where the strand in column `i` passes
    /// under the strand in column `i + 1`.
    Positive,
    /// `S<i>`: classical crossing where the strand in column `i` passes
    /// over the strand in column `i + 1`.
    Negative,
    /// `v<i>`: the strands exchange columns with no over/under information.
    Virtual,
}

impl LetterKind {
    /// True for positive and negative crossings.
    pub fn is_classical(self) -> bool {
        !matches!(self, LetterKind::Virtual)
    }

    /// Swaps positive and negative; virtual crossings are self-mirrored.
    pub fn mirrored(self) -> Self {
        match self {
            LetterKind::Positive => LetterKind::Negative,
            LetterKind::Negative => LetterKind::Positive,
            LetterKind::Virtual => LetterKind::Virtual,
        }
    }
}

/// A single crossing. `index` is 1-based; the letter acts on columns
/// `index` and `index + 1`, so a word of degree `n` admits indices
/// `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub kind: LetterKind,
}

impl BraidLetter {
    pub fn positive(index: usize) -> Self {
        Self { index, kind: LetterKind::Positive }
    }

    pub fn negative(index: usize) -> Self {
        Self { index, kind: LetterKind::Negative }
    }

    pub fn virtual_crossing(index: usize) -> Self {
        Self { index, kind: LetterKind::Virtual }
    }

    /// Columns `{index, index + 1}` of this letter intersect columns
    /// `{i, i + 1}` exactly when the indices differ by at most one.
    pub fn touches_columns_of(self, i: usize) -> bool {
        self.index + 1 >= i && self.index <= i + 1
    }

    pub fn mirrored(self) -> Self {
        Self { index: self.index, kind: self.kind.mirrored() }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::Positive => 's',
            LetterKind::Negative => 'S',
            LetterKind::Virtual => 'v',
        };
        write!(f, "{}{}", c, self.index)
    }
}

/// A non-alternating bigon: two classical crossings of the same index and
/// opposite signs with nothing between them on the involved columns.
/// `first` and `second` are 1-based letter positions within the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bigon {
    pub first: usize,
    pub second: usize,
    pub index: usize,
}

/// A braid diagram of fixed degree, as a top-to-bottom sequence of letters.
///
/// The degree is explicit: trailing crossing-free strands are part of the
/// diagram even though no letter reaches them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// The crossing-free diagram on `degree` strands.
    pub fn identity(degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree);
        }
        Ok(Self { degree, letters: Vec::new() })
    }

    /// Builds a word after checking every letter index against the degree.
    pub fn new(degree: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree);
        }
        for l in &letters {
            if l.index < 1 || l.index >= degree {
                return Err(Error::IndexOutOfRange { index: l.index, degree });
            }
        }
        Ok(Self { degree, letters })
    }

    /// Parses a whitespace-separated word such as `"s1 S2 v1"`.
    ///
    /// Without an explicit degree, the degree is inferred as one more than
    /// the largest index (and 1 for the empty word).
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        let mut max_index = 0;
        for token in text.split_whitespace() {
            let (head, tail) = token.split_at(1);
            let kind = match head {
                "s" => LetterKind::Positive,
                "S" => LetterKind::Negative,
                "v" => LetterKind::Virtual,
                _ => return Err(Error::Syntax(token.to_string())),
            };
            let index: usize = match tail.parse() {
                Ok(i) if i >= 1 => i,
                _ => return Err(Error::Syntax(token.to_string())),
            };
            max_index = max_index.max(index);
            letters.push(BraidLetter { index, kind });
        }
        let degree = degree.unwrap_or(max_index + 1);
        Self::new(degree, letters)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Monoid product: `self` stacked above `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { degree: self.degree, letters })
    }

    /// The `k`-th monoid power; `repeat(0)` is the identity.
    pub fn repeat(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Self { degree: self.degree, letters }
    }

    /// Swaps every positive crossing with a negative one and vice versa.
    pub fn mirror(&self) -> Self {
        Self {
            degree: self.degree,
            letters: self.letters.iter().map(|l| l.mirrored()).collect(),
        }
    }

    /// The word read bottom to top (a horizontal rotation of the diagram).
    pub fn reversed(&self) -> Self {
        Self {
            degree: self.degree,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Adds `left` crossing-free strands on the left and `right` on the
    /// right, shifting every letter index by `left`.
    pub fn embed(&self, left: usize, right: usize) -> Self {
        Self {
            degree: self.degree + left + right,
            letters: self
                .letters
                .iter()
                .map(|l| BraidLetter { index: l.index + left, kind: l.kind })
                .collect(),
        }
    }

    /// Traces every strand from top to bottom. Each letter, classical or
    /// virtual, exchanges the strands in its two columns.
    pub fn permutation(&self) -> Permutation {
        let n = self.degree;
        let mut strand_at_col: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            strand_at_col.swap(l.index - 1, l.index);
        }
        let mut targets = vec![0; n];
        for (col, s) in strand_at_col.iter().enumerate() {
            targets[*s] = col;
        }
        Permutation { targets }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(|l| l.kind.is_classical())
    }

    /// All non-alternating bigons, ordered by first then second position.
    ///
    /// A pair of classical letters of equal index `i` and opposite signs
    /// forms a bigon when every letter strictly between them has columns
    /// disjoint from `{i, i + 1}`. Letters with overlapping columns block
    /// the pair regardless of kind: a virtual crossing on either strand of
    /// the would-be bigon destroys it.
    pub fn bigons(&self) -> Vec<Bigon> {
        let mut out = Vec::new();
        for i in 1..self.degree {
            let mut prev_touching: Option<usize> = None;
            for (p, l) in self.letters.iter().enumerate() {
                if !l.touches_columns_of(i) {
                    continue;
                }
                if let Some(q) = prev_touching {
                    let a = self.letters[q];
                    if a.index == i
                        && l.index == i
                        && a.kind.is_classical()
                        && l.kind.is_classical()
                        && a.kind != l.kind
                    {
                        out.push(Bigon { first: q + 1, second: p + 1, index: i });
                    }
                }
                prev_touching = Some(p);
            }
        }
        out.sort_by_key(|b| (b.first, b.second));
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.bigons().is_empty()
    }

    /// Whether appending `letter` would close a new bigon at the end of the
    /// word. Used to prune irreducible word enumeration: bigons survive
    /// appending, so a word with one never regains irreducibility.
    pub(crate) fn extension_creates_bigon(&self, letter: BraidLetter) -> bool {
        if !letter.kind.is_classical() {
            return false;
        }
        let i = letter.index;
        for a in self.letters.iter().rev() {
            if a.touches_columns_of(i) {
                return a.index == i && a.kind.is_classical() && a.kind != letter.kind;
            }
        }
        false
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
            first = false;
        }
        Ok(())
    }
}

/// A bijection on strand positions `0..n` (0-based internally). For a
/// diagram, `target(i)` is the bottom position of the strand starting at
/// top position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    targets: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { targets: (0..n).collect() }
    }

    /// Builds from a 1-based image list: `images[i - 1]` is the image of
    /// position `i`.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut targets = vec![usize::MAX; n];
        for (i, &img) in images.iter().enumerate() {
            if img < 1 || img > n || targets[i] != usize::MAX {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            targets[i] = img - 1;
        }
        let mut seen = vec![false; n];
        for &t in &targets {
            if seen[t] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[t] = true;
        }
        Ok(Self { targets })
    }

    pub fn degree(&self) -> usize {
        self.targets.len()
    }

    /// Image of 0-based position `i`.
    pub fn target(&self, i: usize) -> usize {
        self.targets[i]
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.targets.iter().map(|t| t + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(i, &t)| i == t)
    }

    pub fn inverse(&self) -> Self {
        let mut targets = vec![0; self.targets.len()];
        for (i, &t) in self.targets.iter().enumerate() {
            targets[t] = i;
        }
        Self { targets }
    }

    /// Composition in diagram order: first `self`, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        assert_eq!(self.degree(), next.degree(), "degree mismatch in composition");
        Self { targets: self.targets.iter().map(|&t| next.targets[t]).collect() }
    }

    /// Cycle decomposition. Each cycle is listed in traversal order
    /// starting from its smallest element; cycles are ordered by that
    /// element. Fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.targets.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.targets[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of pairs `i < j` with `target(i) > target(j)`.
    pub fn inversion_count(&self) -> usize {
        let n = self.targets.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.targets[i] > self.targets[j] {
                    count += 1;
                }
            }
        }
        count
    }
}
