//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the report.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use updown::{
    act, act_via_ou, count_type_one, default_blocks, enumerate_words, in_orbit, is_isotropy,
    membership, ou_matrix, permutation_braid, reachable_set, torus, torus_action_formula, trace,
    weaving, weaving_action_formula, witness_classical, witness_virtual, BraidLetter, BraidWord,
    ColorVector, Error, OrbitFlavor, Permutation, SearchSpec, World,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_word(rng: &mut ChaCha8Rng, degree: usize, max_len: usize, world: World) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let index = rng.gen_range(1..degree);
            match world {
                World::Classical => {
                    if rng.gen_bool(0.5) {
                        BraidLetter::positive(index)
                    } else {
                        BraidLetter::negative(index)
                    }
                }
                World::Virtual => match rng.gen_range(0..3) {
                    0 => BraidLetter::positive(index),
                    1 => BraidLetter::negative(index),
                    _ => BraidLetter::virtual_crossing(index),
                },
            }
        })
        .collect();
    BraidWord::new(degree, letters).unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> ColorVector {
    ColorVector((0..degree).map(|_| rng.gen_range(-bound..=bound)).collect())
}

fn report(name: &str, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    println!("criterion {name}: PASS ({elapsed:.2?})");
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {name} exceeded its time budget: {elapsed:.2?} >= {limit:.2?}"
        );
    }
}

/// 1. Right-action laws on 1,000 random triples.
#[test]
fn criterion_01_monoid_action_laws() {
    let start = Instant::now();
    let mut rng = rng(101);
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let u = random_word(&mut rng, degree, 30, World::Virtual);
        let v = random_word(&mut rng, degree, 30, World::Virtual);
        let x = random_vector(&mut rng, degree, 50);
        let uv = u.concat(&v).unwrap();
        assert_eq!(
            act(&x, &uv).unwrap(),
            act(&act(&x, &u).unwrap(), &v).unwrap()
        );
        let id = BraidWord::identity(degree).unwrap();
        assert_eq!(act(&x, &id).unwrap(), x);
    }
    report("01 monoid-action-laws", start, Some(Duration::from_secs(5)));
}

/// 2. Trace conservation for all words; type-I conservation for classical
/// words. 1,000 random cases each.
#[test]
fn criterion_02_conserved_invariants() {
    let start = Instant::now();
    let mut rng = rng(202);
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Virtual);
        let x = random_vector(&mut rng, degree, 50);
        assert_eq!(trace(&act(&x, &w).unwrap()), trace(&x));
    }
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Classical);
        let x = random_vector(&mut rng, degree, 50);
        assert_eq!(
            count_type_one(&act(&x, &w).unwrap()),
            count_type_one(&x)
        );
    }
    report("02 conserved-invariants", start, Some(Duration::from_secs(5)));
}

/// 3. The over/under-matrix route computes the same action as the sweep on
/// 1,000 random words including virtual letters.
#[test]
fn criterion_03_ou_route_equals_sweep() {
    let start = Instant::now();
    let mut rng = rng(303);
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Virtual);
        let x = random_vector(&mut rng, degree, 50);
        assert_eq!(act_via_ou(&x, &w).unwrap(), act(&x, &w).unwrap());
    }
    report("03 ou-route-equals-sweep", start, None);
}

/// 4. Classical orbit characterization at desk scale on 3 strands from the
/// zero tuple: soundness of the reachable set at length 6, completeness
/// over the box [-3,3] at length 8, and verified witnesses for every
/// target.
#[test]
fn criterion_04_classical_orbit_desk_scale() {
    let start = Instant::now();
    let zero = ColorVector::zeros(3);
    let invariant_type_one = count_type_one(&zero);

    let spec6 = SearchSpec::new(3, World::Classical, 6);
    for v in reachable_set(&zero, &spec6).unwrap() {
        assert_eq!(trace(&v), 0, "reached {v} with nonzero trace");
        assert_eq!(count_type_one(&v), invariant_type_one, "reached {v} off-type");
    }

    let spec8 = SearchSpec::new(3, World::Classical, 8);
    let reach8 = reachable_set(&zero, &spec8).unwrap();
    let mut targets = 0;
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let c = -a - b;
            if c.abs() > 3 {
                continue;
            }
            let y = ColorVector(vec![a, b, c]);
            if count_type_one(&y) != invariant_type_one {
                assert!(
                    !in_orbit(&zero, &y, OrbitFlavor::classical()).unwrap(),
                    "rule admits off-type {y}"
                );
                continue;
            }
            targets += 1;
            assert!(
                in_orbit(&zero, &y, OrbitFlavor::classical()).unwrap(),
                "rule rejects {y}"
            );
            assert!(reach8.contains(&y), "{y} not reached within 8 letters");
            let w = witness_classical(&zero, &y, false).unwrap();
            assert_eq!(act(&zero, &w).unwrap(), y, "witness fails for {y}");
        }
    }
    assert!(targets > 0);
    report(
        "04 classical-orbit-desk-scale",
        start,
        Some(Duration::from_secs(120)),
    );
}

/// 5. Virtual witnesses on 1,000 random equal-trace pairs: verified, pure,
/// irreducible. The worked degree-4 example reproduces its exact block
/// sequence.
#[test]
fn criterion_05_virtual_witnesses() {
    let start = Instant::now();
    let mut rng = rng(505);
    let mut produced = 0;
    while produced < 1000 {
        let degree = rng.gen_range(2..=8);
        let x = random_vector(&mut rng, degree, 20);
        let y = random_vector(&mut rng, degree, 20);
        if trace(&x) != trace(&y) {
            continue;
        }
        produced += 1;
        let w = witness_virtual(&x, &y).unwrap();
        assert_eq!(act(&x, &w).unwrap(), y);
        assert!(w.is_pure());
        assert!(w.is_irreducible());
    }

    let x = ColorVector(vec![8, 4, 2, 2]);
    let y = ColorVector(vec![2, 3, 5, 6]);
    let w = witness_virtual(&x, &y).unwrap();
    let va = &default_blocks().va;
    let expected = va
        .repeat(6)
        .embed(0, 2)
        .concat(&va.repeat(7).embed(1, 1))
        .unwrap()
        .concat(&va.repeat(4).embed(2, 0))
        .unwrap();
    assert_eq!(w, expected, "block sequence differs from the worked example");
    report("05 virtual-witnesses", start, Some(Duration::from_secs(10)));
}

/// 6. Irreducible classical witnesses on 500 random in-orbit pairs on 3 to
/// 7 strands: verified, irreducible, and repair always terminates.
#[test]
fn criterion_06_irreducible_classical_witnesses() {
    let start = Instant::now();
    let mut rng = rng(606);
    for _ in 0..500 {
        let degree = rng.gen_range(3..=7);
        let x = random_vector(&mut rng, degree, 10);
        let carrier = random_word(&mut rng, degree, 30, World::Classical);
        let y = act(&x, &carrier).unwrap();
        match witness_classical(&x, &y, true) {
            Ok(w) => {
                assert_eq!(act(&x, &w).unwrap(), y, "witness fails for {x} -> {y}");
                assert!(w.is_irreducible(), "reducible witness for {x} -> {y}");
            }
            Err(Error::MaxRepairExceeded(budget)) => {
                panic!("repair exceeded {budget} rounds for {x} -> {y}");
            }
            Err(other) => panic!("witness failed for {x} -> {y}: {other}"),
        }
    }
    report(
        "06 irreducible-classical-witnesses",
        start,
        Some(Duration::from_secs(60)),
    );
}

/// 7. Degree-2 exact orbits: irreducible words reach exactly three tuples
/// from zero, irreducible pure words only zero itself, and the degree-2
/// membership rule agrees with breadth-first search.
#[test]
fn criterion_07_degree_two_orbits() {
    let start = Instant::now();
    let zero = ColorVector::zeros(2);

    let spec = SearchSpec::new(2, World::Classical, 8).irreducible();
    let image = reachable_set(&zero, &spec).unwrap();
    let expected: BTreeSet<ColorVector> = [
        ColorVector(vec![-1, 1]),
        ColorVector(vec![0, 0]),
        ColorVector(vec![1, -1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(image, expected);

    let spec = SearchSpec::new(2, World::Classical, 8).irreducible().pure();
    let image = reachable_set(&zero, &spec).unwrap();
    assert_eq!(image, [ColorVector(vec![0, 0])].into_iter().collect());

    // Rule vs breadth-first search. From the zero start every in-box
    // target is within 8 letters, so the box is the full +-8 cube; from a
    // nonzero start a target needs at least |shift| letters, so exact
    // agreement is checked on the +-(8 - |x|_inf) cube (soundness is
    // checked everywhere).
    let flavor = OrbitFlavor::classical();
    let mut starts = vec![zero.clone()];
    let mut rng = rng(707);
    for _ in 0..4 {
        starts.push(random_vector(&mut rng, 2, 2));
    }
    for x in starts {
        let norm = x.iter().map(|e| e.abs()).max().unwrap();
        let bound = 8 - norm;
        let spec = SearchSpec::new(2, World::Classical, 8);
        let reached = reachable_set(&x, &spec).unwrap();
        for v in &reached {
            assert!(in_orbit(&x, v, flavor).unwrap(), "rule rejects reached {v}");
        }
        let reached_inbox: BTreeSet<ColorVector> = reached
            .into_iter()
            .filter(|v| v.iter().all(|e| e.abs() <= bound))
            .collect();
        let mut ruled = BTreeSet::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                let y = ColorVector(vec![a, b]);
                if in_orbit(&x, &y, flavor).unwrap() {
                    ruled.insert(y);
                }
            }
        }
        assert_eq!(reached_inbox, ruled, "disagreement from start {x}");
    }
    report("07 degree-two-orbits", start, None);
}

/// 8. Block inventory self-test: shifts, purity, irreducibility, and
/// irreducibility of powers up to exponent 6.
#[test]
fn criterion_08_block_inventory() {
    let start = Instant::now();
    let blocks = default_blocks();
    let zero2 = ColorVector::zeros(2);
    let zero3 = ColorVector::zeros(3);
    let contracts: [(&BraidWord, &ColorVector, Vec<i64>); 6] = [
        (&blocks.a3, &zero3, vec![0, 2, -2]),
        (&blocks.a3_star, &zero3, vec![0, -2, 2]),
        (&blocks.b3, &zero3, vec![2, 0, -2]),
        (&blocks.b3_star, &zero3, vec![-2, 0, 2]),
        (&blocks.va, &zero2, vec![-1, 1]),
        (&blocks.vb, &zero2, vec![1, -1]),
    ];
    for (block, zero, shift) in contracts {
        assert!(block.is_pure());
        assert!(block.is_irreducible());
        assert_eq!(act(zero, block).unwrap().0, shift);
    }
    for k in 1..=6 {
        for block in [&blocks.b3, &blocks.b3_star, &blocks.va, &blocks.vb] {
            assert!(block.repeat(k).is_irreducible(), "power {k} of {block} reducible");
        }
    }
    report("08 block-inventory", start, None);
}

/// 9. Torus closed forms equal the sweep for 2 <= p <= 7, 1 <= q <= 14.
#[test]
fn criterion_09_torus_closed_forms() {
    let start = Instant::now();
    for p in 2..=7 {
        for q in 1..=14 {
            let word = torus(p, q).unwrap();
            let m = ou_matrix(&word);
            let formula = torus_action_formula(p, q).unwrap();
            let rows: Vec<i64> = m.row_sums().iter().map(|&r| r as i64).collect();
            let cols: Vec<i64> = m.col_sums().iter().map(|&c| c as i64).collect();
            assert_eq!(formula.row_sums, rows, "row sums differ at T({p},{q})");
            assert_eq!(formula.col_sums, cols, "column sums differ at T({p},{q})");
            assert_eq!(
                formula.output,
                act(&ColorVector::zeros(p), &word).unwrap(),
                "action differs at T({p},{q})"
            );
        }
    }
    report("09 torus-closed-forms", start, Some(Duration::from_secs(5)));
}

/// 10. Weaving closed forms equal the sweep for 2 <= q <= p <= 8. In the
/// odd/odd case the naive closed form (constant -1 below the first
/// strand's landing position) is demonstrably wrong, so the direct sweep
/// is the reference; the discrepancy is reported.
#[test]
fn criterion_10_weaving_closed_forms() {
    let start = Instant::now();
    let mut reported = false;
    for p in 2..=8usize {
        for q in 2..=p {
            let word = weaving(p, q).unwrap();
            let direct = act(&ColorVector::zeros(p), &word).unwrap();
            let formula = weaving_action_formula(p, q).unwrap();
            assert_eq!(formula, direct, "mismatch at W({p},{q})");
            if p % 2 == 1 && q % 2 == 1 {
                let t = word.permutation().target(0) + 1;
                let naive = ColorVector(
                    (1..=p).map(|k| if k < t { -1 } else { 0 }).collect(),
                );
                if naive != direct {
                    reported = true;
                    println!(
                        "criterion 10: odd/odd closed form is wrong at W({p},{q}): \
                         stated {naive}, computed {direct} (sweep taken as truth)"
                    );
                }
            }
        }
    }
    assert!(
        reported,
        "expected at least one odd/odd discrepancy in the tested range"
    );
    report("10 weaving-closed-forms", start, None);
}

/// 11. Over/under matrices of positive pure classical words are symmetric
/// (200 random words); the isotropy test is exactly "fixes the zero
/// tuple" (1,000 random words); the closure verdict matches exhaustive
/// fixed-point search on small degrees.
#[test]
fn criterion_11_isotropy_and_closure() {
    let start = Instant::now();
    let mut rng = rng(1111);

    for _ in 0..200 {
        let degree = rng.gen_range(2..=6);
        let word = random_positive_pure(&mut rng, degree);
        assert!(word.is_pure(), "sandwich generator produced an impure word");
        assert!(
            word.letters().iter().all(|l| l.kind == updown::LetterKind::Positive)
        );
        assert!(
            ou_matrix(&word).is_symmetric(),
            "asymmetric matrix for positive pure word {word}"
        );
        assert!(is_isotropy(&word));
    }

    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Virtual);
        let fixes_zero =
            act(&ColorVector::zeros(degree), &w).unwrap() == ColorVector::zeros(degree);
        assert_eq!(is_isotropy(&w), fixes_zero, "isotropy mismatch for {w}");
    }

    for degree in 2..=3usize {
        let spec = SearchSpec::new(degree, World::Virtual, 5);
        for w in enumerate_words(&spec) {
            let verdict = updown::closure_admits(&w);
            let brute = has_fixed_point_in_box(&w, 6);
            assert_eq!(verdict.admits, brute, "closure verdict differs for {w}");
            if let Some(fixed) = verdict.witness {
                assert_eq!(act(&fixed, &w).unwrap(), fixed);
            }
        }
    }
    report("11 isotropy-and-closure", start, None);
}

/// 12. Reversal runs the action backwards; mirroring negates the zero
/// shift. 1,000 random cases each.
#[test]
fn criterion_12_reversal_and_mirror() {
    let start = Instant::now();
    let mut rng = rng(1212);
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Virtual);
        let x = random_vector(&mut rng, degree, 50);
        let y = act(&x, &w).unwrap();
        assert_eq!(act(&y, &w.reversed()).unwrap(), x);
    }
    for _ in 0..1000 {
        let degree = rng.gen_range(2..=6);
        let w = random_word(&mut rng, degree, 30, World::Virtual);
        let zero = ColorVector::zeros(degree);
        assert_eq!(act(&zero, &w.mirror()).unwrap(), -&act(&zero, &w).unwrap());
    }
    report("12 reversal-and-mirror", start, None);
}

/// Random positive pure word: a few sandwiches `g (squared generators) g'`
/// where `g` realizes a random permutation and `g'` its inverse.
fn random_positive_pure(rng: &mut ChaCha8Rng, degree: usize) -> BraidWord {
    let mut word = BraidWord::identity(degree).unwrap();
    for _ in 0..rng.gen_range(1..=3) {
        let mut images: Vec<usize> = (1..=degree).collect();
        for i in (1..degree).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        let perm = Permutation::from_images_one_based(&images).unwrap();
        let gamma = permutation_braid(&perm);
        let gamma_back = permutation_braid(&perm.inverse());
        let mut middle = BraidWord::identity(degree).unwrap();
        for _ in 0..rng.gen_range(1..=3) {
            let index = rng.gen_range(1..degree);
            let squared = BraidWord::new(
                degree,
                vec![BraidLetter::positive(index), BraidLetter::positive(index)],
            )
            .unwrap();
            middle = middle.concat(&squared).unwrap();
        }
        word = word
            .concat(&gamma)
            .unwrap()
            .concat(&middle)
            .unwrap()
            .concat(&gamma_back)
            .unwrap();
    }
    word
}

/// Whether some tuple with entries in [-bound, bound] is fixed by the
/// word. Exhaustive scan with early exit.
fn has_fixed_point_in_box(w: &BraidWord, bound: i64) -> bool {
    let n = w.degree();
    let mut tuple = vec![-bound; n];
    loop {
        let x = ColorVector(tuple.clone());
        if act(&x, w).unwrap() == x {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            tuple[pos] += 1;
            if tuple[pos] <= bound {
                break;
            }
            tuple[pos] = -bound;
            pos += 1;
        }
    }
}

/// The membership rules certify exactly what brute force reaches; sanity
/// anchor for the paper-scale examples quoted throughout the suite.
#[test]
fn worked_membership_examples() {
    let classical = OrbitFlavor::classical();
    let x = ColorVector(vec![1, 4, -7, -1, 2, 9]);
    let y = ColorVector(vec![4, 0, 8, -5, 3, -2]);
    assert!(in_orbit(&x, &y, classical).unwrap());
    let w = witness_classical(&x, &y, true).unwrap();
    assert_eq!(act(&x, &w).unwrap(), y);
    assert!(w.is_irreducible());

    let virt = OrbitFlavor::virtual_diagrams();
    let x = ColorVector(vec![8, 4, 2, 2]);
    let y = ColorVector(vec![2, 3, 5, 6]);
    assert!(in_orbit(&x, &y, virt).unwrap());

    assert!(matches!(
        membership(
            &ColorVector(vec![0, 1]),
            &ColorVector(vec![1, 0]),
            classical
        )
        .unwrap()
        .reason(),
        "type-I mismatch"
    ));
}
