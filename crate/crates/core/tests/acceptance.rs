//! One line per acceptance criterion. Run with `--long` (or
//! `DIAGRAMDEG_LONG=1`) to include the `degrc(B_4)` search.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::Instant;

use diagramdeg::actions::{check_faithful_full, check_faithful_minpairs, check_monogenic, kernel};
use diagramdeg::degrees::{
    big_sequences, brauer_deg_prime_closed, brauer_deg_prime_sum, brauer_p, degree_table, q_size,
};
use diagramdeg::diagram::minimal_pairs;
use diagramdeg::families::{generators, projections};
use diagramdeg::oracle::{LATTICE_CAP, MINIMAL_CAP};
use diagramdeg::{
    ActionTable, BigCount, BrauerContext, Budget, DegreeReport, Diagram, EnumeratedMonoid,
    EquivRelation, Family, SequenceKind, TableMonoid,
};

type Outcome = Result<String, String>;

fn big(v: usize) -> BigCount {
    BigCount::from(v)
}

fn monoid(f: Family, n: usize) -> EnumeratedMonoid {
    EnumeratedMonoid::new(f, n, Budget::new(50_000)).expect("small monoid")
}

fn deg_prime(f: Family, n: usize) -> BigCount {
    DegreeReport::compute(big_sequences(), f, n)
        .unwrap()
        .deg_prime
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let expected: [(Family, &[usize], &[u64]); 7] = [
        (
            Family::P,
            &[2, 3, 4, 5, 6, 7, 8, 9, 10],
            &[6, 21, 83, 363, 1733, 8942, 49484, 291871, 1825501],
        ),
        (
            Family::PB,
            &[2, 3, 4, 5, 6, 7, 8, 9, 10],
            &[5, 13, 38, 116, 382, 1310, 4748, 17848, 70076],
        ),
        (Family::B, &[3, 5, 7, 9], &[6, 45, 420, 4725]),
        (Family::B, &[4, 6, 8, 10], &[18, 150, 1575, 19845]),
        (
            Family::PP,
            &[2, 3, 4, 5, 6, 7, 8, 9, 10],
            &[6, 19, 62, 207, 704, 2431, 8502, 30056, 107236],
        ),
        (
            Family::M,
            &[2, 3, 4, 5, 6, 7, 8, 9, 10],
            &[5, 12, 30, 76, 196, 512, 1353, 3610, 9713],
        ),
        (
            Family::TL,
            &[3, 4, 5, 6, 7, 8, 9, 10],
            &[3, 6, 9, 19, 28, 62, 90, 207],
        ),
    ];
    let table = degree_table(big_sequences(), 10).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for (f, ns, vals) in expected {
        for (&n, &v) in ns.iter().zip(vals) {
            let entry = table
                .iter()
                .find(|e| e.family == f && e.n == n)
                .ok_or(format!("{f}{n} missing"))?;
            let (dp, d) = entry
                .values
                .clone()
                .ok_or(format!("{f}{n} marked outside range"))?;
            ensure(
                dp == BigCount::from(v) && d == BigCount::from(v + 1),
                || format!("{f}{n}: got {dp}, expected {v}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} entries exact"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for (f, cap) in [
        (Family::P, 7),
        (Family::PB, 7),
        (Family::PP, 7),
        (Family::M, 7),
        (Family::TL, 12),
        (Family::B, 8),
    ] {
        for n in f.min_degree(0)..=cap {
            if !f.in_range(n) {
                continue;
            }
            let t = ActionTable::standard(f, n).map_err(|e| e.to_string())?;
            let want = deg_prime(f, n) + big(1);
            ensure(big(t.len()) == want, || {
                format!("{f}{n}: {} states, formula {want}", t.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} actions match 1 + deg'"))
}

fn criterion_3() -> Outcome {
    let mut cases: Vec<(Family, usize)> = Vec::new();
    for f in [Family::P, Family::PB, Family::PP, Family::M] {
        cases.extend((2..=4).map(|n| (f, n)));
    }
    cases.extend((3..=7).map(|n| (Family::TL, n)));
    cases.extend((3..=6).map(|n| (Family::B, n)));
    for &(f, n) in &cases {
        let m = monoid(f, n);
        let t = ActionTable::standard(f, n).map_err(|e| e.to_string())?;
        if let Some((a, b)) = check_faithful_full(&t, &m).map_err(|e| e.to_string())? {
            return Err(format!("{f}{n}: {a} and {b} act identically"));
        }
    }
    let p3 = ActionTable::standard(Family::P, 3).unwrap().len();
    let b4 = ActionTable::standard(Family::B, 4).unwrap().len();
    let b5 = ActionTable::standard(Family::B, 5).unwrap().len();
    ensure(
        p3 == 22 && b4 == 19 && b5 == 46 && monoid(Family::P, 3).len() == 203,
        || format!("sizes P3={p3} B4={b4} B5={b5}"),
    )?;
    Ok(format!("{} monoids, full kernel trivial", cases.len()))
}

fn criterion_4() -> Outcome {
    for (f, n) in [
        (Family::P, 7),
        (Family::B, 7),
        (Family::B, 8),
        (Family::TL, 12),
    ] {
        let t = ActionTable::standard(f, n).map_err(|e| e.to_string())?;
        if let Some((a, b)) = check_faithful_minpairs(&t).map_err(|e| e.to_string())? {
            return Err(format!("{f}{n}: pair ({a}, {b}) not separated"));
        }
    }
    let mut agreed = 0;
    let mut tables: Vec<(EnumeratedMonoid, ActionTable)> = Vec::new();
    for (f, n) in [
        (Family::P, 2),
        (Family::P, 3),
        (Family::PB, 3),
        (Family::PP, 3),
        (Family::M, 3),
        (Family::TL, 5),
        (Family::TL, 6),
        (Family::B, 4),
        (Family::B, 5),
    ] {
        tables.push((monoid(f, n), ActionTable::standard(f, n).unwrap()));
    }
    for (f, n) in [
        (Family::P, 3),
        (Family::P, 4),
        (Family::PB, 3),
        (Family::M, 3),
    ] {
        tables.push((monoid(f, n), ActionTable::mu_prime(f, n).unwrap()));
    }
    for (m, t) in &tables {
        let full = check_faithful_full(t, m).unwrap().is_none();
        let pairs = check_faithful_minpairs(t).unwrap().is_none();
        ensure(full == pairs, || {
            format!(
                "{}{} {}: full {full}, pairs {pairs}",
                t.family(),
                t.degree(),
                t.construction()
            )
        })?;
        agreed += 1;
    }
    Ok(format!("P7 B7 B8 TL12 separated; {agreed} instances agree"))
}

fn criterion_5() -> Outcome {
    let mut monogenic = 0;
    let mut fixed = 0;
    let seq = big_sequences();
    let mut cases: Vec<(Family, usize)> = Vec::new();
    for f in [Family::P, Family::PB, Family::PP, Family::M] {
        cases.extend((2..=5).map(|n| (f, n)));
    }
    cases.extend((3..=11).map(|n| (Family::TL, n)));
    cases.extend((2..=5).map(|n| (Family::TLM, n)));
    cases.extend((3..=8).map(|n| (Family::B, n)));
    for (f, n) in cases {
        let t = ActionTable::standard(f, n).map_err(|e| e.to_string())?;
        let sink = t.sink_index().ok_or(format!("{f}{n}: no sink"))?;
        for g in generators(f, n) {
            ensure(t.act(sink, &g).unwrap() == sink, || {
                format!("{f}{n}: sink moved")
            })?;
        }
        let report = DegreeReport::compute(seq, f, n).map_err(|e| e.to_string())?;
        ensure(
            big(t.partial_degree()) == report.deg_prime
                && report.deg == report.deg_prime.clone() + big(1),
            || format!("{f}{n}: partial degree {}", t.partial_degree()),
        )?;
        fixed += 1;
        let should_be_monogenic = !(f == Family::B && n % 2 == 0);
        if should_be_monogenic {
            ensure(check_monogenic(&t).unwrap(), || {
                format!("{f}{n}: not generated by the seed")
            })?;
            monogenic += 1;
        }
    }
    let t = ActionTable::standard(Family::P, 3).unwrap();
    let sink_orbit = diagramdeg::actions::orbit(&t, t.sink_index().unwrap()).unwrap();
    ensure(sink_orbit.len() == 1, || {
        "the sink orbit is not a singleton".into()
    })?;
    Ok(format!(
        "{monogenic} monogenic from pi, {fixed} with a global fixed point"
    ))
}

fn lambda(m: &EnumeratedMonoid) -> EquivRelation {
    EquivRelation::from_keys(m.elements().iter().map(|a| {
        if a.rank() == 0 {
            (true, a.star().multiply(a).unwrap())
        } else {
            (false, a.clone())
        }
    }))
}

fn criterion_6() -> Outcome {
    for (f, n) in [
        (Family::P, 2),
        (Family::P, 3),
        (Family::PB, 2),
        (Family::PP, 2),
        (Family::M, 2),
    ] {
        let m = monoid(f, n);
        let t = ActionTable::mu_prime(f, n).map_err(|e| e.to_string())?;
        let k = kernel(&t, &m).unwrap();
        ensure(k == lambda(&m), || {
            format!("{f}{n}: kernel differs from lambda")
        })?;
        ensure(!k.is_discrete(), || format!("{f}{n}: mu' is faithful"))?;
    }
    Ok("kernel equals lambda on P2 P3 PB2 PP2 M2".into())
}

fn criterion_7() -> Outcome {
    let cases = [
        (Family::P, 2, 3),
        (Family::PB, 2, 3),
        (Family::PP, 2, 3),
        (Family::M, 2, 3),
        (Family::B, 3, 2),
        (Family::B, 4, 3),
        (Family::TL, 4, 3),
        (Family::TLM, 3, 2),
    ];
    let mut counts = Vec::new();
    for (f, n, want) in cases {
        let m = monoid(f, n);
        let tm = TableMonoid::from_enumerated(&m).map_err(|e| e.to_string())?;
        let minimal: BTreeSet<EquivRelation> = tm
            .minimal_congruences(MINIMAL_CAP)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let principal: BTreeSet<EquivRelation> = minimal_pairs(f, n)
            .unwrap()
            .iter()
            .map(|(a, b)| tm.principal_congruence(m.index_of(a).unwrap(), m.index_of(b).unwrap()))
            .collect();
        ensure(minimal == principal && minimal.len() == want, || {
            format!(
                "{f}{n}: {} minimal, {} from pairs",
                minimal.len(),
                principal.len()
            )
        })?;
        counts.push(minimal.len().to_string());
    }
    Ok(format!("counts {}", counts.join("/")))
}

fn criterion_8(long: bool) -> Outcome {
    for (f, n) in [(Family::B, 3), (Family::TL, 4)] {
        let tm = TableMonoid::from_enumerated(&monoid(f, n)).unwrap();
        let found = tm
            .degrc_bruteforce(LATTICE_CAP)
            .map_err(|e| e.to_string())?;
        let want = DegreeReport::compute(big_sequences(), f, n).unwrap().deg;
        ensure(big(found) == want && found == 7, || {
            format!("{f}{n}: degrc {found}, formula {want}")
        })?;
    }
    if !long {
        return Ok("degrc(B3) = degrc(TL4) = 7; B4 stretch not run".into());
    }
    let tm = TableMonoid::from_enumerated(&monoid(Family::B, 4)).unwrap();
    let found = tm.degrc_bruteforce(200).map_err(|e| e.to_string())?;
    ensure(found == 22, || format!("degrc(B4) = {found}"))?;
    Ok("degrc(B3) = degrc(TL4) = 7, degrc(B4) = 22".into())
}

/// `L^U`-classes by breadth-first search over left multiplication by `U`.
fn lu_class_count(u: &[Diagram], class: &[Diagram]) -> usize {
    let mut seen: HashSet<&Diagram> = HashSet::new();
    let mut classes = 0;
    for a in class {
        if seen.contains(a) {
            continue;
        }
        classes += 1;
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in u {
                let y = g.multiply(&x).unwrap();
                if let Some(y) = class.iter().find(|c| **c == y) {
                    if seen.insert(y) {
                        queue.push_back(y.clone());
                    }
                }
            }
        }
    }
    classes
}

fn criterion_9() -> Outcome {
    let seq = big_sequences();
    let mut classes = 0;
    for n in [4, 5] {
        let m = monoid(Family::B, n);
        let ctx = BrauerContext::new(n).unwrap();
        let u = ctx.u();
        let mut l_classes: std::collections::BTreeMap<Diagram, Vec<Diagram>> = Default::default();
        for a in m.elements().iter().filter(|a| ctx.in_k(a)) {
            l_classes
                .entry(a.star().multiply(a).unwrap())
                .or_default()
                .push(a.clone());
        }
        for (e, class) in &l_classes {
            let r = e.rank();
            let want = if r % 2 == 1 {
                seq.odd_double_factorial(r as i64)
            } else {
                seq.odd_double_factorial(r as i64 - 1)
            }
            .unwrap();
            let got = lu_class_count(&u, class);
            ensure(big(got) == want, || {
                format!("B{n}, L-class of {e}: {got} classes, expected {want}")
            })?;
            classes += 1;
        }
    }
    Ok(format!(
        "{classes} L-classes of B4, B5 split as r!/|Gamma_r|"
    ))
}

fn criterion_10() -> Outcome {
    use SequenceKind::*;
    let seq = big_sequences();
    let s = |k, i| seq.get(k, i).unwrap();
    let count = |f, n, r| big(projections(f, n, r).unwrap().len());
    for n in 1..=8 {
        let (b0, b1, b2) = (s(Bell, n), s(Bell, n + 1), s(Bell, n + 2));
        let p = [
            count(Family::P, n, 0),
            count(Family::P, n, 1),
            if n >= 2 {
                count(Family::P, n, 2)
            } else {
                big(0)
            },
        ];
        ensure(p[0] == b0 && p[1] == b1.clone() - &b0, || {
            format!("P{n} ranks 0, 1")
        })?;
        if n >= 2 {
            ensure(big(2) * &p[2] + big(3) * &b1 == b2 + &b0, || {
                format!("P{n} rank 2")
            })?;
        }
        let (i0, i1, i2) = (s(Involution, n), s(Involution, n + 1), s(Involution, n + 2));
        ensure(
            count(Family::PB, n, 0) == i0 && count(Family::PB, n, 1) == i1.clone() - &i0,
            || format!("PB{n}"),
        )?;
        if n >= 2 {
            ensure(
                big(2) * count(Family::PB, n, 2) + big(2) * &i1 == i2,
                || format!("PB{n} rank 2"),
            )?;
        }
        let (c0, c1, c2) = (s(Catalan, n), s(Catalan, n + 1), s(Catalan, n + 2));
        ensure(
            count(Family::PP, n, 0) == c0 && count(Family::PP, n, 1) == c1.clone() - &c0,
            || format!("PP{n}"),
        )?;
        if n >= 2 {
            ensure(count(Family::PP, n, 2) + big(3) * &c1 == c2 + &c0, || {
                format!("PP{n} rank 2")
            })?;
        }
        let (m0, m1, m2) = (s(Motzkin, n), s(Motzkin, n + 1), s(Motzkin, n + 2));
        ensure(
            count(Family::M, n, 0) == m0 && count(Family::M, n, 1) == m1.clone() - &m0,
            || format!("M{n}"),
        )?;
        if n >= 2 {
            ensure(count(Family::M, n, 2) + big(2) * &m1 == m2, || {
                format!("M{n} rank 2")
            })?;
        }
        if n % 2 == 0 {
            ensure(count(Family::TL, n, 0) == s(Catalan, n / 2), || {
                format!("TL{n} rank 0")
            })?;
        } else {
            let k = n.div_ceil(2);
            ensure(count(Family::TL, n, 1) == s(Catalan, k), || {
                format!("TL{n} rank 1")
            })?;
            if n >= 3 {
                ensure(
                    count(Family::TL, n, 3) + big(2) * s(Catalan, k) == s(Catalan, k + 1),
                    || format!("TL{n} rank 3"),
                )?;
            }
        }
    }
    for n in 2..=8 {
        for f in [Family::P, Family::PB, Family::PP, Family::M] {
            let summed: BigCount = (0..=2).map(|r| count(f, n, r)).sum();
            ensure(q_size(seq, f, n).unwrap() == summed, || {
                format!("|Q| of {f}{n}")
            })?;
        }
    }
    for n in 3..=12 {
        let summed: BigCount = if n % 2 == 0 {
            (0..=2).map(|r| count(Family::PP, n / 2, r)).sum()
        } else {
            count(Family::TL, n, 1) + count(Family::TL, n, 3)
        };
        ensure(q_size(seq, Family::TL, n).unwrap() == summed, || {
            format!("|Q| of TL{n}")
        })?;
    }
    for n in 1..=7 {
        for r in 0..=n {
            ensure(
                brauer_p(seq, n, r).unwrap() == count(Family::B, n, r),
                || format!("p_{r}(B{n})"),
            )?;
        }
    }
    for n in 1..=25 {
        ensure(
            brauer_deg_prime_closed(seq, n).unwrap() == brauer_deg_prime_sum(seq, n).unwrap(),
            || format!("closed form, n = {n}"),
        )?;
    }
    Ok("projection counts n <= 8, |Q|, p_r(B_n) n <= 7, closed forms n <= 25".into())
}

fn right_congruence_on_generators(m: &EnumeratedMonoid, rel: &EquivRelation) -> bool {
    let gens: Vec<usize> = generators(m.family(), m.degree())
        .iter()
        .map(|g| m.index_of(g).unwrap())
        .collect();
    let reps = rel.representatives();
    (0..m.len()).all(|i| {
        gens.iter()
            .all(|&g| rel.related(m.product(i, g), m.product(reps[rel.class_of(i)], g)))
    })
}

fn criterion_11() -> Outcome {
    let p2 = monoid(Family::P, 2);
    let els = p2.elements();
    for a in els {
        ensure(
            a.star().star() == *a && a.multiply(&a.star()).unwrap().multiply(a).unwrap() == *a,
            || format!("star laws at {a}"),
        )?;
        for b in els {
            let ab = a.multiply(b).unwrap();
            ensure(ab.star() == b.star().multiply(&a.star()).unwrap(), || {
                format!("(ab)* at {a}, {b}")
            })?;
            for c in els {
                ensure(
                    ab.multiply(c).unwrap() == a.multiply(&b.multiply(c).unwrap()).unwrap(),
                    || format!("associativity at {a}, {b}, {c}"),
                )?;
            }
        }
    }
    for n in 3..=6 {
        let m = monoid(Family::B, n);
        let ctx = BrauerContext::new(n).unwrap();
        let sigma = EquivRelation::from_keys(m.elements().iter().map(|a| ctx.sigma_class(a)));
        ensure(right_congruence_on_generators(&m, &sigma), || {
            format!("sigma on B{n}")
        })?;
        if n % 2 == 0 {
            let tau = EquivRelation::from_keys(m.elements().iter().map(|a| {
                if !ctx.in_k(a) {
                    (0, None)
                } else if a.rank() <= 2 {
                    (1, Some(a.hat_pairup().unwrap()))
                } else {
                    (2, Some(ctx.canonical(a)))
                }
            }));
            ensure(right_congruence_on_generators(&m, &tau), || {
                format!("tau on B{n}")
            })?;
        }
    }
    let b4 = monoid(Family::B, 4);
    let chi = EquivRelation::from_keys(b4.elements().iter().map(|a| {
        if a.rank() <= 2 {
            a.hat_pairup().unwrap()
        } else {
            a.clone()
        }
    }));
    let mul = |i, j| b4.product(i, j);
    ensure(
        chi.is_right_compatible(mul) && chi.is_left_compatible(mul),
        || "chi on B4".into(),
    )?;
    let pp3 = monoid(Family::PP, 3);
    let images: HashSet<Diagram> = pp3.elements().iter().map(|a| a.tilde().unwrap()).collect();
    let tl6: HashSet<Diagram> = monoid(Family::TL, 6).elements().iter().cloned().collect();
    ensure(images == tl6, || "tilde is not onto TL6".into())?;
    for a in pp3.elements() {
        for b in pp3.elements() {
            let lhs = a.multiply(b).unwrap().tilde().unwrap();
            ensure(
                lhs == a.tilde().unwrap().multiply(&b.tilde().unwrap()).unwrap(),
                || format!("tilde at {a}, {b}"),
            )?;
        }
    }
    Ok("P2 laws, sigma on B3..B6, tau on B4 B6, chi on B4, tilde on PP3".into())
}

fn main() -> ExitCode {
    let long = std::env::args().any(|a| a == "--long")
        || std::env::var("DIAGRAMDEG_LONG").is_ok_and(|v| v == "1");
    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(move || criterion_8(long))),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
        (11, Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (i, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {i:>2}: PASS ({secs:.2}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i:>2}: FAIL ({secs:.2}s) {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
