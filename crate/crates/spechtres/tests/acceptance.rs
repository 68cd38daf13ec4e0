//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//!
//! 1. golden differentials at n = 6 (under 1 s)
//! 2. golden differentials at d = 4 (under 30 s)
//! 3. Betti tables equal closed forms and hook dimensions, 4<=n<=8, 1<=d<=4
//! 4. chain condition and minimality for all those instances
//! 5. strand exactness up to top twist + 2 for n<=6, d<=2
//! 6. Hilbert numerator identity for 4<=n<=8 (and internal dd1 consistency)
//! 7. well-definedness: exhaustive Garnir suite n<=6, randomized n=7 / d=3
//! 8. straightening agrees with the linear-solve oracle
//! 9. ideal decomposition at (5,2), (6,2), and d=2
//! 10. random sign-flip mutations are caught

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use spechtres::polyring::{rat, Monomial, Polynomial, Rational};
use spechtres::resolution::{
    build_dd1, build_n22, diff_dd1, diff_n22_middle, diff_n22_top, Family,
};
use spechtres::specht::{Straightener, TabloidSolver};
use spechtres::tableau::{enumerate_all_tableaux, Partition, Tableau};
use spechtres::verify::{
    betti_expected, betti_from_complex, check_betti, check_chain, check_decomposition,
    check_hilbert_numerator, check_minimal, check_strand_exactness, check_well_defined,
    flip_random_entry, WellDefScope,
};

fn criterion(n: usize, name: &str, ok: bool, detail: &str) {
    if ok {
        println!("[PASS] criterion {n} ({name}): {detail}");
    } else {
        panic!("[FAIL] criterion {n} ({name}): {detail}");
    }
}

/// Sum of sign * straighten(T) * product of x_vars over a term list.
fn image_of_terms(
    st: &mut Straightener,
    nvars: usize,
    terms: &[(i64, &str, &[usize])],
) -> Vec<Polynomial> {
    let mut image = vec![Polynomial::zero(nvars); st.dim()];
    for (sign, ttxt, vars) in terms {
        let t: Tableau = ttxt.parse().unwrap();
        let coords = st.straighten(&t);
        let mut m = Monomial::one();
        for &v in *vars {
            m = m.mul(&Monomial::var(v));
        }
        for (slot, c) in image.iter_mut().zip(coords.coords()) {
            if !num_traits::Zero::is_zero(c) {
                *slot = slot.add(&Polynomial::monomial(nvars, m.clone(), rat(*sign) * c));
            }
        }
    }
    image
}

#[test]
fn criterion_1_golden_differentials_n6() {
    let start = Instant::now();

    // top differential on the single column tableau
    let mut st = Straightener::new(Partition::new(vec![2, 2, 1, 1]).unwrap());
    let got = diff_n22_top(6, &mut st).unwrap();
    let top_terms: Vec<(i64, &str, &[usize])> = vec![
        (1, "3,1/4,2/5/6", &[1, 2]),
        (-1, "2,1/4,3/5/6", &[1, 3]),
        (1, "2,1/3,4/5/6", &[1, 4]),
        (-1, "2,1/3,5/4/6", &[1, 5]),
        (1, "2,1/3,6/4/5", &[1, 6]),
        (1, "1,2/4,3/5/6", &[2, 3]),
        (-1, "1,2/3,4/5/6", &[2, 4]),
        (1, "1,2/3,5/4/6", &[2, 5]),
        (-1, "1,2/3,6/4/5", &[2, 6]),
        (1, "1,3/2,4/5/6", &[3, 4]),
        (-1, "1,3/2,5/4/6", &[3, 5]),
        (1, "1,3/2,6/4/5", &[3, 6]),
        (1, "1,4/2,5/3/6", &[4, 5]),
        (-1, "1,4/2,6/3/5", &[4, 6]),
        (1, "1,5/2,6/3/4", &[5, 6]),
    ];
    let want = image_of_terms(&mut st, 6, &top_terms);
    assert_eq!(got, want, "top differential image at n=6");

    // d_3 on e(3,1/4,2/5/6)
    let mut st = Straightener::new(Partition::new(vec![3, 2, 1]).unwrap());
    let src: Tableau = "3,1/4,2/5/6".parse().unwrap();
    let got = diff_n22_middle(&src, 3, &mut st).unwrap();
    let terms: Vec<(i64, &str, &[usize])> = vec![
        (1, "4,1,3/5,2/6", &[3]),
        (-1, "3,1,4/5,2/6", &[4]),
        (1, "3,1,5/4,2/6", &[5]),
        (-1, "3,1,6/4,2/5", &[6]),
    ];
    let want = image_of_terms(&mut st, 6, &terms);
    assert_eq!(got, want, "d_3 image at n=6");

    // d_2 on e(4,1,3/5,2/6)
    let mut st = Straightener::new(Partition::new(vec![4, 2]).unwrap());
    let src: Tableau = "4,1,3/5,2/6".parse().unwrap();
    let got = diff_n22_middle(&src, 2, &mut st).unwrap();
    let terms: Vec<(i64, &str, &[usize])> = vec![
        (1, "5,1,3,4/6,2", &[4]),
        (-1, "4,1,3,5/6,2", &[5]),
        (1, "4,1,3,6/5,2", &[6]),
    ];
    let want = image_of_terms(&mut st, 6, &terms);
    assert_eq!(got, want, "d_2 image at n=6");

    let elapsed = start.elapsed();
    criterion(
        1,
        "golden differentials n=6",
        elapsed.as_secs_f64() < 1.0,
        &format!("all three displayed images match exactly in {elapsed:?}"),
    );
}

fn variable_block(image: &[Polynomial], v: usize) -> Vec<Rational> {
    image
        .iter()
        .map(|p| p.coefficient(&Monomial::var(v)))
        .collect()
}

fn straightened_sum(st: &mut Straightener, sign: i64, tableaux: &[&str]) -> Vec<Rational> {
    let mut acc = vec![Rational::from_integer(0.into()); st.dim()];
    for ttxt in tableaux {
        let t: Tableau = ttxt.parse().unwrap();
        for (a, c) in acc.iter_mut().zip(st.straighten(&t).coords()) {
            *a += rat(sign) * c;
        }
    }
    acc
}

#[test]
fn criterion_2_golden_differentials_d4() {
    let start = Instant::now();

    // d_2 on e(1,2,3,4/5,6,7/8/9)
    let mut st = Straightener::new(Partition::new(vec![4, 4, 1]).unwrap());
    let src: Tableau = "1,2,3,4/5,6,7/8/9".parse().unwrap();
    let got = diff_dd1(&src, 2, &mut st).unwrap();
    let terms: Vec<(i64, &str, &[usize])> = vec![
        (1, "5,2,3,4/8,6,7,1/9", &[1]),
        (-1, "1,2,3,4/8,6,7,5/9", &[5]),
        (1, "1,2,3,4/5,6,7,8/9", &[8]),
        (-1, "1,2,3,4/5,6,7,9/8", &[9]),
    ];
    let want = image_of_terms(&mut st, 9, &terms);
    assert_eq!(got, want, "d_2 image at d=4");

    // d_4 on e(1,2,3,4/5/6/7/8/9): the x1, x5, and x9 coefficient blocks
    let mut st = Straightener::new(Partition::new(vec![4, 2, 1, 1, 1]).unwrap());
    let src: Tableau = "1,2,3,4/5/6/7/8/9".parse().unwrap();
    let got = diff_dd1(&src, 4, &mut st).unwrap();

    let x1 = straightened_sum(
        &mut st,
        1,
        &["5,2,3,4/6,1/7/8/9", "5,3,2,4/6,1/7/8/9", "5,4,2,3/6,1/7/8/9"],
    );
    assert_eq!(variable_block(&got, 1), x1, "x1 block of d_4 at d=4");

    let x5 = straightened_sum(
        &mut st,
        -1,
        &["1,2,3,4/6,5/7/8/9", "1,3,2,4/6,5/7/8/9", "1,4,2,3/6,5/7/8/9"],
    );
    assert_eq!(variable_block(&got, 5), x5, "x5 block of d_4 at d=4");

    let x9 = straightened_sum(
        &mut st,
        -1,
        &["1,2,3,4/5,9/6/7/8", "1,3,2,4/5,9/6/7/8", "1,4,2,3/5,9/6/7/8"],
    );
    assert_eq!(variable_block(&got, 9), x9, "x9 block of d_4 at d=4");

    let elapsed = start.elapsed();
    criterion(
        2,
        "golden differentials d=4",
        elapsed.as_secs_f64() < 30.0,
        &format!("d_2 and d_4 displayed blocks match exactly in {elapsed:?}"),
    );
}

fn all_instances() -> Vec<spechtres::resolution::GradedComplex> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.push(build_n22(n).unwrap());
    }
    for d in 1..=4 {
        out.push(build_dd1(d).unwrap());
    }
    out
}

#[test]
fn criterion_3_betti_tables() {
    for c in all_instances() {
        let r = check_betti(&c);
        assert!(r.passed, "{}: {:?}", c.family.label(), r.witness);
        assert_eq!(
            betti_from_complex(&c),
            betti_expected(c.family),
            "{}",
            c.family.label()
        );
    }
    // pinned values
    let t = betti_expected(Family::N22 { n: 6 });
    assert_eq!(
        (t.get(1, 2), t.get(2, 3), t.get(3, 4), t.get(4, 6)),
        (9, 16, 9, 1)
    );
    let t = betti_expected(Family::Dd1 { d: 2 });
    assert_eq!((t.get(1, 4), t.get(2, 5)), (5, 4));
    let t = betti_expected(Family::Dd1 { d: 4 });
    assert_eq!(
        (t.get(1, 6), t.get(2, 7), t.get(3, 8), t.get(4, 9)),
        (84, 216, 189, 56)
    );
    criterion(
        3,
        "Betti tables",
        true,
        "closed forms = hook dimensions = assembled ranks for 4<=n<=8, 1<=d<=4",
    );
}

#[test]
fn criterion_4_chain_and_minimality() {
    let start = Instant::now();
    for c in all_instances() {
        let r = check_chain(&c);
        assert!(r.passed, "{} chain: {:?}", c.family.label(), r.witness);
        let r = check_minimal(&c);
        assert!(r.passed, "{} minimal: {:?}", c.family.label(), r.witness);
    }
    criterion(
        4,
        "chain + minimality",
        true,
        &format!("all 9 instances in {:?}", start.elapsed()),
    );
}

#[test]
fn criterion_5_strand_exactness() {
    let mut details = Vec::new();
    for n in 4..=6 {
        let c = build_n22(n).unwrap();
        let r = check_strand_exactness(&c, None);
        assert!(r.passed, "n={n}: {:?}", r.witness);
        details.push(format!("n={n} up to degree {}", c.top_twist() + 2));
    }
    for d in 1..=2 {
        let c = build_dd1(d).unwrap();
        let r = check_strand_exactness(&c, None);
        assert!(r.passed, "d={d}: {:?}", r.witness);
        details.push(format!("d={d} up to degree {}", c.top_twist() + 2));
    }
    criterion(5, "strand exactness", true, &details.join(", "));
}

#[test]
fn criterion_6_hilbert_identity() {
    for n in 4..=8 {
        let c = build_n22(n).unwrap();
        let r = check_hilbert_numerator(&c);
        assert!(r.passed, "n={n}: {:?}", r.witness);
    }
    for d in 1..=4 {
        let c = build_dd1(d).unwrap();
        let r = check_hilbert_numerator(&c);
        assert!(r.passed, "d={d}: {:?}", r.witness);
    }
    criterion(
        6,
        "Hilbert numerator",
        true,
        "(1+(n-2)t+t^2)(1-t)^(n-2) for 4<=n<=8; dd1 numerators divisible and nonnegative",
    );
}

#[test]
fn criterion_7_well_definedness() {
    for n in 4..=6 {
        let r = check_well_defined(Family::N22 { n }, WellDefScope::Exhaustive);
        assert!(r.passed, "n={n}: {:?}", r.witness);
    }
    let r = check_well_defined(
        Family::N22 { n: 7 },
        WellDefScope::Randomized {
            samples: 500,
            seed: 20260823,
        },
    );
    assert!(r.passed, "n=7 randomized: {:?}", r.witness);
    let r = check_well_defined(
        Family::Dd1 { d: 3 },
        WellDefScope::Randomized {
            samples: 500,
            seed: 20260824,
        },
    );
    assert!(r.passed, "d=3 randomized: {:?}", r.witness);
    criterion(
        7,
        "well-definedness",
        true,
        "Garnir relations map to zero: exhaustive n<=6, 500 random cases each at n=7 and d=3",
    );
}

#[test]
fn criterion_8_straighten_vs_oracle() {
    // exhaustive over every module shape of the families with n <= 6
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    for n in 4..=6usize {
        for i in 1..=n - 3 {
            let mut parts = vec![n - 1 - i, 2];
            parts.extend(std::iter::repeat(1).take(i - 1));
            shapes.push(parts);
        }
        shapes.push(vec![1; n]);
    }
    for d in 1..=2usize {
        for i in 1..=d {
            let mut parts = vec![d, d - i + 1];
            parts.extend(std::iter::repeat(1).take(i));
            shapes.push(parts);
        }
    }
    shapes.sort();
    shapes.dedup();
    for parts in &shapes {
        let shape = Partition::new(parts.clone()).unwrap();
        let solver = TabloidSolver::new(shape.clone()).unwrap();
        let mut st = Straightener::new(shape.clone());
        for t in enumerate_all_tableaux(&shape) {
            let fast = st.straighten(&t);
            let slow = solver.straighten_oracle(&t).unwrap();
            assert_eq!(fast, slow, "shape {shape}, tableau {t}");
        }
    }

    // randomized tableaux for shapes with 7 <= n <= 9
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let big_shapes: Vec<Vec<usize>> = vec![
        vec![5, 2],
        vec![4, 2, 1],
        vec![3, 2, 1, 1],
        vec![6, 2],
        vec![5, 2, 1],
        vec![4, 4, 1],
    ];
    for parts in &big_shapes {
        let shape = Partition::new(parts.clone()).unwrap();
        let n = shape.n();
        let solver = TabloidSolver::new(shape.clone()).unwrap();
        let mut st = Straightener::new(shape.clone());
        for _ in 0..40 {
            let mut entries: Vec<usize> = (1..=n).collect();
            entries.shuffle(&mut rng);
            let mut rows = Vec::new();
            let mut pos = 0;
            for &len in shape.parts() {
                rows.push(entries[pos..pos + len].to_vec());
                pos += len;
            }
            let t = Tableau::new(rows).unwrap();
            let fast = st.straighten(&t);
            let slow = solver.straighten_oracle(&t).unwrap();
            assert_eq!(fast, slow, "shape {shape}, tableau {t}");
        }
    }
    criterion(
        8,
        "straighten vs oracle",
        true,
        &format!(
            "exhaustive over {} shapes with n<=6, 40 random tableaux each for {} larger shapes",
            shapes.len(),
            big_shapes.len()
        ),
    );
}

#[test]
fn criterion_9_decomposition() {
    for n in [5, 6] {
        let r = check_decomposition(Family::N22 { n }, None);
        assert!(r.passed, "n={n}: {:?}", r.witness);
    }
    let r = check_decomposition(Family::Dd1 { d: 2 }, None);
    assert!(r.passed, "d=2: {:?}", r.witness);
    criterion(
        9,
        "ideal decomposition",
        true,
        "degree-wise equality with the subspace-arrangement intersection at (5,2), (6,2), d=2",
    );
}

#[test]
fn criterion_10_mutation_sensitivity() {
    let c = build_n22(6).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut caught_by_chain = 0;
    let mut caught_by_strands = 0;
    for k in 0..50 {
        let (mutant, desc) = flip_random_entry(&c, &mut rng);
        if !check_chain(&mutant).passed {
            caught_by_chain += 1;
            continue;
        }
        let r = check_strand_exactness(&mutant, Some(mutant.top_twist()));
        assert!(!r.passed, "mutation {k} undetected: {desc}");
        caught_by_strands += 1;
    }
    criterion(
        10,
        "mutation sensitivity",
        true,
        &format!(
            "50/50 sign flips detected ({caught_by_chain} by the chain check, {caught_by_strands} by strands)"
        ),
    );
}

/// Every report printed by the acceptance suite carries a witness when it
/// fails; spot-check the reporting contract itself.
#[test]
fn failing_reports_carry_witnesses() {
    let c = build_n22(5).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let (mutant, _) = flip_random_entry(&c, &mut rng);
    let chain = check_chain(&mutant);
    let strands = check_strand_exactness(&mutant, Some(mutant.top_twist()));
    assert!(!chain.passed || !strands.passed);
    for r in [chain, strands] {
        if !r.passed {
            assert!(r.witness.is_some(), "failing report must carry a witness");
        }
    }
}
