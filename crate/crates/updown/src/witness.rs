//! Constructive witnesses: explicit words realizing any orbit relation,
//! generator families (torus, weaving, permutation-realizing words, pure
//! building blocks), bigon repair, and the closure labelling criterion.

use std::sync::OnceLock;

use crate::action::{act, ou_matrix, ColorVector};
use crate::braid::{BraidLetter, BraidWord, Permutation};
use crate::orbit::{self, membership, Membership, OrbitFlavor};
use crate::{Error, Result};

/// Named pure building blocks used by the witness constructions.
///
/// The degree-3 classical blocks shift the zero tuple by `(0, ±2, ∓2)`
/// (`a3`, `a3_star`) and `(±2, 0, ∓2)` (`b3`, `b3_star`); the degree-2
/// virtual blocks shift it by `(∓1, ±1)` (`va`, `vb`). All six are pure
/// and irreducible, and the powers of `b3`, `b3_star`, `va` and `vb` stay
/// irreducible because their power junctions never close a bigon.
#[derive(Debug, Clone)]
pub struct BlockInventory {
    pub a3: BraidWord,
    pub a3_star: BraidWord,
    pub b3: BraidWord,
    pub b3_star: BraidWord,
    pub va: BraidWord,
    pub vb: BraidWord,
}

impl BlockInventory {
    fn build() -> Self {
        let a3 = BraidWord::parse("S2 s1 s1 s2", Some(3)).expect("valid block");
        let b3 = BraidWord::parse("S1 s2 s2 s1 S2 s1 s1 s2", Some(3)).expect("valid block");
        let va = BraidWord::parse("s1 v1", Some(2)).expect("valid block");
        let vb = BraidWord::parse("S1 v1", Some(2)).expect("valid block");
        let inv = Self {
            a3_star: a3.mirror(),
            b3_star: b3.mirror(),
            a3,
            b3,
            va,
            vb,
        };
        inv.check_contracts();
        inv
    }

    fn check_contracts(&self) {
        let shifts: [(&BraidWord, &[i64]); 6] = [
            (&self.a3, &[0, 2, -2]),
            (&self.a3_star, &[0, -2, 2]),
            (&self.b3, &[2, 0, -2]),
            (&self.b3_star, &[-2, 0, 2]),
            (&self.va, &[-1, 1]),
            (&self.vb, &[1, -1]),
        ];
        for (block, want) in shifts {
            assert!(block.is_pure(), "block `{block}` is not pure");
            assert!(block.is_irreducible(), "block `{block}` is reducible");
            let zero = ColorVector::zeros(block.degree());
            let got = act(&zero, block).expect("degrees match");
            assert_eq!(got.0, want, "block `{block}` has the wrong shift");
        }
    }
}

/// The default block inventory, contract-checked on first use.
pub fn default_blocks() -> &'static BlockInventory {
    static BLOCKS: OnceLock<BlockInventory> = OnceLock::new();
    BLOCKS.get_or_init(BlockInventory::build)
}

/// The torus word `T(p, q)`: `q` repetitions of the full positive sweep
/// `s1 s2 … s(p-1)`, of degree `p` and length `q (p - 1)`.
pub fn torus(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 || q < 1 {
        return Err(Error::InvalidArgument(format!(
            "torus word requires p >= 2 and q >= 1, got ({p}, {q})"
        )));
    }
    let sweep: Vec<BraidLetter> = (1..p).map(BraidLetter::positive).collect();
    Ok(BraidWord::new(p, sweep)?.repeat(q))
}

/// The weaving word `W(p, q)`: `q` repetitions of the alternating sweep
/// `s1 S2 s3 S4 …`, of degree `p`.
///
/// With `q = p` the word is pure and fixes every tuple: each strand then
/// alternates over- and under-crossings in equal numbers.
pub fn weaving(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 || q < 1 {
        return Err(Error::InvalidArgument(format!(
            "weaving word requires p >= 2 and q >= 1, got ({p}, {q})"
        )));
    }
    let sweep: Vec<BraidLetter> = (1..p)
        .map(|i| {
            if i % 2 == 1 {
                BraidLetter::positive(i)
            } else {
                BraidLetter::negative(i)
            }
        })
        .collect();
    Ok(BraidWord::new(p, sweep)?.repeat(q))
}

/// Closed-form row sums, column sums, and action of a torus word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusAction {
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
    pub output: ColorVector,
}

/// Evaluates the closed forms for `T(p, q)`: per top strand `i`, the
/// over-count `r_i`, the under-count `c_i`, and the zero-tuple action
/// `y` with `y[target(i)] = r_i - c_i`. Matches [`ou_matrix`] and [`act`]
/// on the generated word.
pub fn torus_action_formula(p: usize, q: usize) -> Result<TorusAction> {
    if p < 2 || q < 1 {
        return Err(Error::InvalidArgument(format!(
            "torus formulas require p >= 2 and q >= 1, got ({p}, {q})"
        )));
    }
    let (pp, qq) = (p as i64, q as i64);
    let mut row_sums = Vec::with_capacity(p);
    let mut col_sums = Vec::with_capacity(p);
    let mut diff = Vec::with_capacity(p);
    if p >= q {
        for i in 1..=pp {
            let low = i <= qq;
            row_sums.push(if low { qq - 1 } else { qq });
            col_sums.push(if low { pp - 1 } else { 0 });
            diff.push(if low { qq - pp } else { qq });
        }
    } else {
        let a1 = qq / pp;
        let a2 = qq % pp;
        for i in 1..=pp {
            let low = i <= a2;
            row_sums.push(if low {
                (a2 - 1) * (a1 + 1) + (pp - a2) * a1
            } else {
                a2 * (a1 + 1) + (pp - a2 - 1) * a1
            });
            col_sums.push(if low { (a1 + 1) * (pp - 1) } else { a1 * (pp - 1) });
            diff.push(if low { a2 - pp } else { a2 });
        }
    }
    let perm = torus(p, q)?.permutation();
    let mut output = vec![0; p];
    for (i, d) in diff.iter().enumerate() {
        output[perm.target(i)] = *d;
    }
    Ok(TorusAction { row_sums, col_sums, output: ColorVector(output) })
}

/// Evaluates the zero-tuple action of `W(p, q)` for `p >= q` by parity
/// case. Writing `t` for the bottom position of the first strand (1-based):
///
/// - `p`, `q` even: the zero tuple is fixed;
/// - `p` even, `q` odd: position `k` gets `-1` when `k ≡ t (mod 2)`,
///   else `+1`;
/// - `p` odd, `q` even: positions below `t` get `0`, the rest alternate
///   `-1`/`+1` starting with `-1` at `t`;
/// - `p`, `q` odd: no closed form is used; the action is computed by a
///   direct sweep.
pub fn weaving_action_formula(p: usize, q: usize) -> Result<ColorVector> {
    if p < 2 || q < 1 || p < q {
        return Err(Error::InvalidArgument(format!(
            "weaving formulas require p >= q >= 1 and p >= 2, got ({p}, {q})"
        )));
    }
    match (p % 2 == 0, q % 2 == 0) {
        (true, true) => Ok(ColorVector::zeros(p)),
        (true, false) => {
            let t = weaving(p, q)?.permutation().target(0) + 1;
            let out = (1..=p)
                .map(|k| if (k + t) % 2 == 0 { -1 } else { 1 })
                .collect();
            Ok(ColorVector(out))
        }
        (false, true) => {
            let t = weaving(p, q)?.permutation().target(0) + 1;
            let out = (1..=p)
                .map(|k| {
                    if k < t {
                        0
                    } else if (k + t) % 2 == 0 {
                        -1
                    } else {
                        1
                    }
                })
                .collect();
            Ok(ColorVector(out))
        }
        (false, false) => act(&ColorVector::zeros(p), &weaving(p, q)?),
    }
}

/// A positive word with the given permutation in which each pair of
/// strands crosses at most once; its length is the inversion count.
///
/// Emission is by bubble sort on bottom positions: scan adjacent columns
/// left to right, crossing any out-of-order pair, until sorted.
pub fn permutation_braid(perm: &Permutation) -> BraidWord {
    let n = perm.degree();
    let mut strand_at_col: Vec<usize> = (0..n).collect();
    let mut letters = Vec::with_capacity(perm.inversion_count());
    loop {
        let mut swapped = false;
        for c in 0..n.saturating_sub(1) {
            if perm.target(strand_at_col[c]) > perm.target(strand_at_col[c + 1]) {
                letters.push(BraidLetter::positive(c + 1));
                strand_at_col.swap(c, c + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord::new(n, letters).expect("indices stay in range")
}

/// A permutation sending the k-th type-I position of `x` to the k-th
/// type-I position of `y`, and likewise for type-II positions. Applying
/// any classical word with this permutation to `x` yields a tuple
/// congruent to `y` componentwise mod 2.
pub fn type_matching_permutation(x: &ColorVector, y: &ColorVector) -> Result<Permutation> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { len: y.len(), degree: x.len() });
    }
    let split = |v: &ColorVector| -> (Vec<usize>, Vec<usize>) {
        let mut ones = Vec::new();
        let mut twos = Vec::new();
        for (i, &e) in v.iter().enumerate() {
            if orbit::is_type_one(i, e) {
                ones.push(i);
            } else {
                twos.push(i);
            }
        }
        (ones, twos)
    };
    let (ones_x, twos_x) = split(x);
    let (ones_y, twos_y) = split(y);
    if ones_x.len() != ones_y.len() {
        return Err(Error::TypeCountMismatch);
    }
    let mut images = vec![0; x.len()];
    for (&from, &to) in ones_x.iter().zip(&ones_y) {
        images[from] = to + 1;
    }
    for (&from, &to) in twos_x.iter().zip(&twos_y) {
        images[from] = to + 1;
    }
    Permutation::from_images_one_based(&images)
}

/// Block power with sign: non-negative exponents use `pos`, negative ones
/// use `neg` (the mirrored block) with the absolute value.
fn signed_power(pos: &BraidWord, neg: &BraidWord, k: i64) -> BraidWord {
    if k >= 0 {
        pos.repeat(k as usize)
    } else {
        neg.repeat((-k) as usize)
    }
}

/// Exponents of the pure-witness assembly: block `j` (1-based,
/// `j <= n - 2`) receives `e_j = t_j / 2 + e_{j-2}`, and the final
/// degree-3 block receives `f = t_{n-1} / 2 + e_{n-3}`.
fn pure_witness_exponents(t: &ColorVector) -> (Vec<i64>, i64) {
    let n = t.len();
    let mut e = vec![0i64; n - 2];
    for j in 1..=n - 2 {
        let prev = if j >= 3 { e[j - 3] } else { 0 };
        e[j - 1] = t[j - 1] / 2 + prev;
    }
    let tail = if n >= 4 { e[n - 4] } else { 0 }; // e_{n-3}
    let f = t[n - 2] / 2 + tail;
    (e, f)
}

/// A pure classical word shifting the zero tuple by `t`, for any `t` with
/// even entries and zero sum (degree at least 3).
///
/// The word chains embedded `b3` powers along the strands — block `j`
/// spans columns `j..j+2` with exponent `e_j` — and closes with an `a3`
/// power on the last three columns. The partial alternating sums
/// telescope so that column `k` nets exactly `t_k`.
pub fn pure_witness(t: &ColorVector) -> Result<BraidWord> {
    let n = t.len();
    if n < 3 {
        return Err(Error::InvalidArgument(
            "pure witness assembly requires degree at least 3".to_string(),
        ));
    }
    if t.iter().any(|&e| e & 1 != 0) {
        return Err(Error::InvalidArgument("target shift has an odd entry".to_string()));
    }
    if orbit::trace(t) != 0 {
        return Err(Error::InvalidArgument("target shift has nonzero sum".to_string()));
    }
    let blocks = default_blocks();
    let (e, f) = pure_witness_exponents(t);
    let mut word = BraidWord::identity(n)?;
    for (j, &exp) in e.iter().enumerate() {
        if exp == 0 {
            continue;
        }
        let block = signed_power(&blocks.b3, &blocks.b3_star, exp).embed(j, n - j - 3);
        word = word.concat(&block)?;
    }
    if f != 0 {
        let block = signed_power(&blocks.a3, &blocks.a3_star, f).embed(n - 3, 0);
        word = word.concat(&block)?;
    }
    Ok(word)
}

/// Pure degree-2 transfer chain: block `j` shifts columns `j, j+1` by
/// `(2s_j, -2s_j)` where `s_j` is half the partial sum of `d`. The chain
/// shifts the zero tuple by exactly `d` (entries even, sum zero).
fn transfer_chain(d: &[i64], degree: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut partial = 0i64;
    for (j, &dj) in d.iter().take(degree - 1).enumerate() {
        partial += dj;
        let s = partial / 2;
        let index = j + 1;
        let pair: [BraidLetter; 2] = if s > 0 {
            [BraidLetter::negative(index), BraidLetter::positive(index)]
        } else {
            [BraidLetter::positive(index), BraidLetter::negative(index)]
        };
        for _ in 0..s.unsigned_abs() {
            letters.extend_from_slice(&pair);
        }
    }
    BraidWord::new(degree, letters)
}

/// Lowest iteration budget allowed for bigon repair beyond the initial
/// bigon count.
const REPAIR_SLACK: usize = 8;

/// Removes every non-alternating bigon by inserting action-trivial weaving
/// words, preserving degree, permutation, and the action on every tuple.
///
/// Each round locates the first bigon and tries the four insertions `w`,
/// `w*`, `w w*`, `w* w` (with `w` the degree-matched pure weaving word)
/// immediately before the bigon's second letter, keeping the admissible
/// insertion that leaves the fewest bigons; admissible means the targeted
/// bigon is gone and the total count has not grown. Fails with
/// [`Error::MaxRepairExceeded`] after `initial bigon count + 8` rounds.
pub fn make_irreducible(w: &BraidWord) -> Result<BraidWord> {
    let initial = w.bigons().len();
    if initial == 0 {
        return Ok(w.clone());
    }
    let n = w.degree();
    let weave = weaving(n, n)?;
    let weave_star = weave.mirror();
    let candidates = [
        weave.clone(),
        weave_star.clone(),
        weave.concat(&weave_star)?,
        weave_star.concat(&weave)?,
    ];
    let budget = initial + REPAIR_SLACK;
    let mut current = w.clone();
    for _ in 0..budget {
        let bigons = current.bigons();
        let Some(target) = bigons.first().copied() else {
            return Ok(current);
        };
        let count = bigons.len();
        let mut best: Option<(usize, BraidWord)> = None;
        for candidate in &candidates {
            let mut letters = current.letters().to_vec();
            letters.splice(target.second - 1..target.second - 1, candidate.letters().iter().copied());
            let trial = BraidWord::new(n, letters)?;
            let trial_bigons = trial.bigons();
            let shifted_second = target.second + candidate.len();
            let survives = trial_bigons
                .iter()
                .any(|b| b.first == target.first && b.second == shifted_second);
            if survives || trial_bigons.len() > count {
                continue;
            }
            if best.as_ref().map_or(true, |(c, _)| trial_bigons.len() < *c) {
                best = Some((trial_bigons.len(), trial));
            }
        }
        match best {
            Some((_, next)) => current = next,
            None => return Err(Error::MaxRepairExceeded(budget)),
        }
    }
    if current.is_irreducible() {
        Ok(current)
    } else {
        Err(Error::MaxRepairExceeded(budget))
    }
}

fn not_in_orbit(m: Membership) -> Error {
    match m {
        Membership::OutsideDegreeTwoIrreducible => Error::UnsupportedDegree,
        other => Error::NotInOrbit(other.reason()),
    }
}

/// A classical word carrying `x` to `y`; irreducible on request.
///
/// The construction prepends a positive word matching component types, so
/// the remaining shift is even with zero sum, then realizes that shift by
/// a pure chain: degree-2 transfer blocks when reducibility is acceptable,
/// or the [`pure_witness`] assembly followed by bigon repair.
pub fn witness_classical(
    x: &ColorVector,
    y: &ColorVector,
    irreducible: bool,
) -> Result<BraidWord> {
    let flavor = if irreducible {
        OrbitFlavor::classical().irreducible()
    } else {
        OrbitFlavor::classical()
    };
    let m = membership(x, y, flavor)?;
    if !m.is_member() {
        return Err(not_in_orbit(m));
    }
    let n = x.len();
    if n == 1 {
        return BraidWord::identity(1);
    }
    if n == 2 && irreducible {
        let word = if y == x {
            BraidWord::identity(2)?
        } else if y.0 == [x[1] + 1, x[0] - 1] {
            BraidWord::parse("s1", Some(2))?
        } else {
            BraidWord::parse("S1", Some(2))?
        };
        return Ok(word);
    }
    let gamma = permutation_braid(&type_matching_permutation(x, y)?);
    let z = act(x, &gamma)?;
    let d = y - &z;
    let word = if irreducible {
        make_irreducible(&gamma.concat(&pure_witness(&d)?)?)?
    } else {
        gamma.concat(&transfer_chain(&d.0, n)?)?
    };
    debug_assert_eq!(act(x, &word).as_ref(), Ok(y));
    Ok(word)
}

/// A pure classical word carrying `x` to `y` (so `y - x` must be even with
/// zero sum); irreducible on request, except that on two strands the only
/// irreducible pure action is the identity.
pub fn witness_classical_pure(
    x: &ColorVector,
    y: &ColorVector,
    irreducible: bool,
) -> Result<BraidWord> {
    let flavor = if irreducible {
        OrbitFlavor::classical().pure().irreducible()
    } else {
        OrbitFlavor::classical().pure()
    };
    let m = membership(x, y, flavor)?;
    if !m.is_member() {
        return Err(not_in_orbit(m));
    }
    let n = x.len();
    if n == 1 {
        return BraidWord::identity(1);
    }
    let d = y - x;
    let word = if n == 2 {
        transfer_chain(&d.0, 2)?
    } else if irreducible {
        make_irreducible(&pure_witness(&d)?)?
    } else {
        pure_witness(&d)?
    };
    debug_assert_eq!(act(x, &word).as_ref(), Ok(y));
    Ok(word)
}

/// A pure irreducible virtual word carrying `x` to `y` (equal traces).
///
/// Column `j` receives a power of the degree-2 virtual block chosen by the
/// sign of the partial sum of `y - x`; blocks alternate classical and
/// virtual crossings, so no bigon can ever form.
pub fn witness_virtual(x: &ColorVector, y: &ColorVector) -> Result<BraidWord> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { len: y.len(), degree: x.len() });
    }
    if x.is_empty() {
        return Err(Error::InvalidDegree);
    }
    if orbit::trace(x) != orbit::trace(y) {
        return Err(Error::TraceMismatch);
    }
    let n = x.len();
    let blocks = default_blocks();
    let mut word = BraidWord::identity(n)?;
    let mut partial = 0i64;
    for j in 1..n {
        partial += y[j - 1] - x[j - 1];
        if partial == 0 {
            continue;
        }
        let block = signed_power(&blocks.vb, &blocks.va, partial).embed(j - 1, n - j - 1);
        word = word.concat(&block)?;
    }
    debug_assert_eq!(act(x, &word).as_ref(), Ok(y));
    Ok(word)
}

/// Net over/under balance of one permutation cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBalance {
    /// Top positions (1-based) in traversal order, starting at the
    /// smallest.
    pub positions: Vec<usize>,
    /// Sum of per-strand balances over the cycle.
    pub sum: i64,
}

/// Verdict on whether the closure of a diagram admits a consistent edge
/// labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub admits: bool,
    /// A fixed tuple of the action, present exactly when `admits` holds.
    pub witness: Option<ColorVector>,
    pub cycle_report: Vec<CycleBalance>,
}

/// Decides closure labelability: the closure admits a labelling exactly
/// when some tuple is fixed by the word, which happens exactly when each
/// permutation cycle's over/under balance sums to zero. On success a fixed
/// tuple is built by rooting every cycle at zero and propagating the
/// balances, and verified by a direct sweep.
pub fn closure_admits(w: &BraidWord) -> ClosureVerdict {
    let n = w.degree();
    let balance = ou_matrix(w).strand_balance();
    let perm = w.permutation();
    let cycles = perm.cycles();
    let mut cycle_report = Vec::with_capacity(cycles.len());
    let mut admits = true;
    for cycle in &cycles {
        let sum: i64 = cycle.iter().map(|&i| balance[i]).sum();
        admits &= sum == 0;
        cycle_report.push(CycleBalance {
            positions: cycle.iter().map(|&i| i + 1).collect(),
            sum,
        });
    }
    let witness = admits.then(|| {
        let mut x = vec![0i64; n];
        for cycle in &cycles {
            let mut value = 0i64;
            for &i in cycle {
                x[i] = value;
                value += balance[i];
            }
        }
        ColorVector(x)
    });
    if let Some(fixed) = &witness {
        let image = act(fixed, w).expect("witness has matching length");
        assert_eq!(&image, fixed, "fixed-tuple construction failed verification");
    }
    ClosureVerdict { admits, witness, cycle_report }
}
