//! Brute-force ground truth at desk scale: exhaustive word enumeration and
//! reachable-set computation, used to cross-check the membership rules and
//! witness constructions on small degrees.

use std::collections::{BTreeSet, HashSet};

use crate::action::{act, apply_letter, ColorVector};
use crate::braid::{BraidLetter, BraidWord};
use crate::orbit::World;
use crate::{Error, Result};

/// Bounds for an exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpec {
    pub degree: usize,
    pub world: World,
    pub require_pure: bool,
    pub require_irreducible: bool,
    /// Words up to this many letters are enumerated.
    pub max_len: usize,
    /// When set, tuples with any entry beyond this bound are dropped from
    /// returned sets; expansion still explores them up to `max_len`.
    pub box_bound: Option<i64>,
}

impl SearchSpec {
    pub fn new(degree: usize, world: World, max_len: usize) -> Self {
        Self {
            degree,
            world,
            require_pure: false,
            require_irreducible: false,
            max_len,
            box_bound: None,
        }
    }

    pub fn pure(mut self) -> Self {
        self.require_pure = true;
        self
    }

    pub fn irreducible(mut self) -> Self {
        self.require_irreducible = true;
        self
    }

    pub fn boxed(mut self, bound: i64) -> Self {
        self.box_bound = Some(bound);
        self
    }

    fn in_box(&self, v: &ColorVector) -> bool {
        self.box_bound.map_or(true, |b| v.iter().all(|e| e.abs() <= b))
    }
}

/// The letter alphabet in enumeration order: for each index, positive,
/// then negative, then (in the virtual world) virtual.
pub fn alphabet(degree: usize, world: World) -> Vec<BraidLetter> {
    let mut letters = Vec::new();
    for i in 1..degree {
        letters.push(BraidLetter::positive(i));
        letters.push(BraidLetter::negative(i));
        if world == World::Virtual {
            letters.push(BraidLetter::virtual_crossing(i));
        }
    }
    letters
}

/// Depth-first stream of all words satisfying the spec, in lexicographic
/// order with prefixes before extensions (so the identity comes first).
///
/// Bigons survive appending letters, so irreducible enumeration prunes
/// entire subtrees as soon as a prefix closes one. Purity is a whole-word
/// property and is checked at yield time only.
pub struct WordStream {
    alphabet: Vec<BraidLetter>,
    max_len: usize,
    require_pure: bool,
    require_irreducible: bool,
    stack: Vec<BraidWord>,
}

impl Iterator for WordStream {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        while let Some(word) = self.stack.pop() {
            if word.len() < self.max_len {
                for &letter in self.alphabet.iter().rev() {
                    if self.require_irreducible && word.extension_creates_bigon(letter) {
                        continue;
                    }
                    let mut letters = word.letters().to_vec();
                    letters.push(letter);
                    let child =
                        BraidWord::new(word.degree(), letters).expect("letter index in range");
                    self.stack.push(child);
                }
            }
            if !self.require_pure || word.is_pure() {
                return Some(word);
            }
        }
        None
    }
}

/// Streams every word admitted by the spec.
pub fn enumerate_words(spec: &SearchSpec) -> WordStream {
    let root = BraidWord::identity(spec.degree).expect("positive degree");
    WordStream {
        alphabet: alphabet(spec.degree, spec.world),
        max_len: spec.max_len,
        require_pure: spec.require_pure,
        require_irreducible: spec.require_irreducible,
        stack: vec![root],
    }
}

/// All tuples reachable from `x` by words admitted by the spec, clipped to
/// the storage box when one is set.
///
/// Without purity or irreducibility requirements, the image set of words
/// of length at most `L` equals the breadth-first ball of radius `L` in
/// the single-letter transition graph, so the search runs on tuples with
/// deduplication. Purity and irreducibility are word properties, not tuple
/// properties, so those searches enumerate words.
pub fn reachable_set(x: &ColorVector, spec: &SearchSpec) -> Result<BTreeSet<ColorVector>> {
    if x.len() != spec.degree {
        return Err(Error::LengthMismatch { len: x.len(), degree: spec.degree });
    }
    if spec.degree == 0 {
        return Err(Error::InvalidDegree);
    }
    if spec.require_pure || spec.require_irreducible {
        let mut out = BTreeSet::new();
        for word in enumerate_words(spec) {
            let image = act(x, &word).expect("degrees match");
            if spec.in_box(&image) {
                out.insert(image);
            }
        }
        return Ok(out);
    }
    let letters = alphabet(spec.degree, spec.world);
    let mut seen: HashSet<ColorVector> = HashSet::new();
    seen.insert(x.clone());
    let mut frontier = vec![x.clone()];
    for _ in 0..spec.max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for &letter in &letters {
                let mut image = v.0.clone();
                apply_letter(&mut image, letter);
                let image = ColorVector(image);
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(seen.into_iter().filter(|v| spec.in_box(v)).collect())
}
