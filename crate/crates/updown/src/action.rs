//! The edge-labelling action of words on integer tuples, per-strand edge
//! labellings, and the over/under count matrix.
//!
//! Sweeping a word top to bottom carries one integer per column. At a
//! classical crossing the over-strand's value gains one and the
//! under-strand's value loses one, then the strands (and their values)
//! exchange columns; at a virtual crossing the values exchange unchanged.
//!
//! Crossing convention: in a positive letter `s<i>` the strand in column
//! `i` passes under the strand in column `i + 1`; in a negative letter
//! `S<i>` it passes over. Hence `(0,0) · s1 = (1,-1)` and
//! `(0,0) · s1 S1 = (-2,2)`.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::braid::{BraidLetter, BraidWord, LetterKind, Permutation};
use crate::{Error, Result};

/// An integer tuple carried along the strands of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorVector(pub Vec<i64>);

impl ColorVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses a comma-separated list such as `"0,-2,3"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::InvalidArgument("empty tuple".to_string()));
        }
        let mut entries = Vec::new();
        for part in text.split(',') {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad integer `{part}` in tuple")))?;
            entries.push(v);
        }
        Ok(Self(entries))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }
}

impl fmt::Display for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl From<Vec<i64>> for ColorVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl Index<usize> for ColorVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ColorVector {
    type Output = ColorVector;
    fn add(self, rhs: &ColorVector) -> ColorVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        ColorVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ColorVector {
    type Output = ColorVector;
    fn sub(self, rhs: &ColorVector) -> ColorVector {
        assert_eq!(self.len(), rhs.len(), "length mismatch");
        ColorVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ColorVector {
    type Output = ColorVector;
    fn neg(self) -> ColorVector {
        ColorVector(self.0.iter().map(|a| -a).collect())
    }
}

/// One sweep step on the per-column value vector.
pub(crate) fn apply_letter(vals: &mut [i64], letter: BraidLetter) {
    let c = letter.index - 1;
    match letter.kind {
        LetterKind::Positive => {
            let (a, b) = (vals[c], vals[c + 1]);
            vals[c] = b + 1;
            vals[c + 1] = a - 1;
        }
        LetterKind::Negative => {
            let (a, b) = (vals[c], vals[c + 1]);
            vals[c] = b - 1;
            vals[c + 1] = a + 1;
        }
        LetterKind::Virtual => vals.swap(c, c + 1),
    }
}

/// Applies the word to a tuple, returning the bottom tuple.
pub fn act(x: &ColorVector, w: &BraidWord) -> Result<ColorVector> {
    if x.len() != w.degree() {
        return Err(Error::LengthMismatch { len: x.len(), degree: w.degree() });
    }
    let mut vals = x.0.clone();
    for &l in w.letters() {
        apply_letter(&mut vals, l);
    }
    Ok(ColorVector(vals))
}

/// Integer labels on every edge of a diagram, grouped by top strand.
///
/// Strand `i` (0-based top position) carries one label per edge, from top
/// to bottom: `strands[i][0]` is the initial value and each classical
/// crossing on the strand appends a label differing by exactly one.
/// Virtual crossings do not split edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub strands: Vec<Vec<i64>>,
}

impl EdgeColoring {
    /// Reassembles the bottom tuple from the final labels, using the
    /// permutation to place each strand's last label at its bottom column.
    pub fn bottom(&self, perm: &Permutation) -> ColorVector {
        let mut out = vec![0; self.strands.len()];
        for (i, labels) in self.strands.iter().enumerate() {
            out[perm.target(i)] = *labels.last().expect("strand has at least one edge");
        }
        ColorVector(out)
    }
}

/// Computes the full edge labelling of the diagram for an initial tuple.
pub fn full_coloring(x: &ColorVector, w: &BraidWord) -> Result<EdgeColoring> {
    if x.len() != w.degree() {
        return Err(Error::LengthMismatch { len: x.len(), degree: w.degree() });
    }
    let n = w.degree();
    let mut vals = x.0.clone();
    let mut strand_at_col: Vec<usize> = (0..n).collect();
    let mut strands: Vec<Vec<i64>> = x.0.iter().map(|&v| vec![v]).collect();
    for &l in w.letters() {
        let c = l.index - 1;
        apply_letter(&mut vals, l);
        if l.kind.is_classical() {
            // after the swap the strand formerly in column c sits in c + 1
            strands[strand_at_col[c]].push(vals[c + 1]);
            strands[strand_at_col[c + 1]].push(vals[c]);
        }
        strand_at_col.swap(c, c + 1);
    }
    Ok(EdgeColoring { strands })
}

/// Square matrix of over-crossing counts: entry `(i, j)` counts crossings
/// where the strand starting at top position `i` passes over the strand
/// starting at top position `j`. The main diagonal is zero and the total
/// equals the number of classical letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OUMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl OUMatrix {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Entry at 0-based top positions `(over, under)`.
    pub fn count(&self, over: usize, under: usize) -> u64 {
        self.entries[over * self.n + under]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.count(i, j)).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.count(i, j)).sum()).collect()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.count(i, j) == self.count(j, i)))
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    /// Row sums minus column sums, per top position: the net over/under
    /// balance of each strand.
    pub fn strand_balance(&self) -> Vec<i64> {
        self.row_sums()
            .iter()
            .zip(self.col_sums())
            .map(|(&r, c)| r as i64 - c as i64)
            .collect()
    }
}

/// Sweeps the word counting, for every classical crossing, which top
/// strand passes over which.
pub fn ou_matrix(w: &BraidWord) -> OUMatrix {
    let n = w.degree();
    let mut entries = vec![0u64; n * n];
    let mut strand_at_col: Vec<usize> = (0..n).collect();
    for &l in w.letters() {
        let c = l.index - 1;
        match l.kind {
            LetterKind::Positive => {
                entries[strand_at_col[c + 1] * n + strand_at_col[c]] += 1;
            }
            LetterKind::Negative => {
                entries[strand_at_col[c] * n + strand_at_col[c + 1]] += 1;
            }
            LetterKind::Virtual => {}
        }
        strand_at_col.swap(c, c + 1);
    }
    OUMatrix { n, entries }
}

/// Computes the action through the over/under matrix: the strand starting
/// at top position `i` ends at `target(i)` carrying `x_i` plus its net
/// over/under balance. Agrees with [`act`] on every input.
pub fn act_via_ou(x: &ColorVector, w: &BraidWord) -> Result<ColorVector> {
    if x.len() != w.degree() {
        return Err(Error::LengthMismatch { len: x.len(), degree: w.degree() });
    }
    let balance = ou_matrix(w).strand_balance();
    let perm = w.permutation();
    let mut out = vec![0; w.degree()];
    for i in 0..w.degree() {
        out[perm.target(i)] = x[i] + balance[i];
    }
    Ok(ColorVector(out))
}

/// Over- and under-crossing counts of one strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingCounts {
    pub overs: u64,
    pub unders: u64,
}

/// Per top strand, the number of over- and under-crossings, counted by a
/// direct sweep (no matrix). Matches the row and column sums of
/// [`ou_matrix`].
pub fn strand_counts(w: &BraidWord) -> Vec<CrossingCounts> {
    let n = w.degree();
    let mut counts = vec![CrossingCounts { overs: 0, unders: 0 }; n];
    let mut strand_at_col: Vec<usize> = (0..n).collect();
    for &l in w.letters() {
        let c = l.index - 1;
        match l.kind {
            LetterKind::Positive => {
                counts[strand_at_col[c + 1]].overs += 1;
                counts[strand_at_col[c]].unders += 1;
            }
            LetterKind::Negative => {
                counts[strand_at_col[c]].overs += 1;
                counts[strand_at_col[c + 1]].unders += 1;
            }
            LetterKind::Virtual => {}
        }
        strand_at_col.swap(c, c + 1);
    }
    counts
}

/// Whether the word fixes the zero tuple: every strand's over-count equals
/// its under-count, i.e. every row sum of the over/under matrix equals the
/// matching column sum.
pub fn is_isotropy(w: &BraidWord) -> bool {
    let m = ou_matrix(w);
    m.row_sums() == m.col_sums()
}
