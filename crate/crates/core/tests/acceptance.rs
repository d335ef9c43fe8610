//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails or exceeds its time budget.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schur_core::cayley::{
    automorphism_order, cayley_graph, is_grr, ColouredCayleyGraph, Method, OracleConfig,
};
use schur_core::construct::{certify, check_spec, table_primes, table_row, Rule};
use schur_core::{closure, Group, GroupElement, RingElement, SchurPartition};

type Outcome = Result<String, String>;

/// `(id, name, time budget in seconds, check)`
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn worked_example() -> Outcome {
    let d7 = Group::dihedral(7).map_err(err)?;
    let c = d7.parse_elements("a,ab,ab^3,b,b^6").map_err(err)?;
    let p = closure(d7, &c).map_err(err)?;
    ensure(p.is_trivial() && p.rank() == 14, || {
        format!("rank {}", p.rank())
    })?;
    let square = RingElement::simple_quantity(d7, &c).map_err(err)?.pow(2);
    let listing: [(i64, &str); 12] = [
        (5, "1"),
        (4, "ab^2"),
        (2, "a"),
        (2, "ab"),
        (2, "b^2"),
        (2, "ab^4"),
        (2, "b^5"),
        (2, "ab^6"),
        (1, "b^3"),
        (1, "b"),
        (1, "b^4"),
        (1, "b^6"),
    ];
    let expected = RingElement::from_terms(
        d7,
        listing
            .iter()
            .map(|&(k, g)| (k, d7.parse_element(g).unwrap())),
    )
    .map_err(err)?;
    ensure(square == expected, || format!("C^2 = {square}"))?;
    Ok(format!("rank 14; C^2 = {square}"))
}

fn example_z8() -> Outcome {
    let z8 = Group::cyclic(8).map_err(err)?;
    let p = SchurPartition::parse(z8, "1; g,g^5; g^3,g^7; g^2,g^6; g^4").map_err(err)?;
    p.validate().map_err(err)?;
    let beta = p.structure_constants().map_err(err)?;
    let picks = [(2, 4, 2, 1), (2, 3, 1, 2), (2, 1, 4, 2)];
    for (i, j, k, want) in picks {
        ensure(beta.get(i, j, k) == want, || {
            format!("beta_{i},{j}^{k} = {}", beta.get(i, j, k))
        })?;
    }
    let cg = ColouredCayleyGraph::from_partition(&p);
    let mut agree = 0;
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                let w = cg.walk_count(i, j, k).map_err(err)?;
                ensure(w == beta.get(i, j, k), || {
                    format!("walk_count({i},{j},{k}) = {w}")
                })?;
                agree += 1;
            }
        }
    }
    Ok(format!(
        "beta_2,4^2 = 1, beta_2,3^1 = 2, beta_2,1^4 = 2; {agree}/125 walk counts agree"
    ))
}

fn table() -> Outcome {
    const REFERENCE: [(u32, u32, u32, u32); 22] = [
        (7, 2, 3, 0),
        (11, 3, 4, 1),
        (13, 4, 6, 0),
        (17, 5, 7, 1),
        (19, 6, 9, 0),
        (23, 7, 10, 1),
        (29, 9, 13, 1),
        (31, 10, 15, 0),
        (37, 12, 18, 0),
        (41, 13, 19, 1),
        (43, 14, 21, 0),
        (47, 15, 22, 1),
        (53, 17, 25, 1),
        (59, 19, 28, 1),
        (61, 20, 30, 0),
        (67, 22, 33, 0),
        (71, 23, 34, 1),
        (73, 24, 36, 0),
        (79, 26, 39, 0),
        (83, 27, 40, 1),
        (89, 29, 43, 1),
        (97, 32, 48, 0),
    ];
    let primes = table_primes(97);
    ensure(primes.len() == REFERENCE.len(), || {
        format!("{} primes", primes.len())
    })?;
    let mut failed = Vec::new();
    for (&p, &row) in primes.iter().zip(&REFERENCE) {
        let spec = table_row(p).map_err(err)?;
        ensure((spec.n, spec.r, spec.s, spec.t) == row, || {
            format!("row for p = {p} is {spec}")
        })?;
        let cert = certify(&spec, Method::Closure, &OracleConfig::default()).map_err(err)?;
        if !cert.certificate.is_grr {
            failed.push(p);
        }
    }
    ensure(failed.is_empty(), || {
        format!("22 rows match (p = 67 from columns); closure is not trivial for p in {failed:?}")
    })?;
    Ok("22 rows match (p = 67 from columns); every row certifies by closure".into())
}

fn oracle_cross_check() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for p in [7, 11, 13, 17, 19] {
        let spec = table_row(p).map_err(err)?;
        let graph = cayley_graph(spec.group(), &spec.connecting_set(), false).map_err(err)?;
        let aut = automorphism_order(&graph, &OracleConfig::default()).map_err(err)?;
        seen.push(format!("|Aut(D{p})| = {}", aut.order));
        if aut.order != BigUint::from(2 * p) || !graph.left_regular_embeds() {
            bad.push(p);
        }
    }
    let summary = seen.join(", ");
    ensure(bad.is_empty(), || {
        format!("{summary}; expected 2p fails for p in {bad:?}")
    })?;
    Ok(summary)
}

fn inheritance() -> Outcome {
    let cfg = OracleConfig::default();
    for n in [11, 13] {
        let spec = check_spec(n, 3, 4, 1, Rule::ThreeRTwoS).map_err(err)?;
        let cert = certify(&spec, Method::Both, &cfg).map_err(err)?;
        ensure(cert.certificate.is_grr, || {
            format!("(3,4,1) is not a GRR for D{n}")
        })?;
    }
    let mut failed = Vec::new();
    for p in table_primes(31) {
        let spec = check_spec(p, 2, 3, 0, Rule::ThreeRTwoS).map_err(err)?;
        if !certify(&spec, Method::Closure, &cfg)
            .map_err(err)?
            .certificate
            .is_grr
        {
            failed.push(p);
        }
    }
    ensure(failed.is_empty(), || {
        format!("(3,4,1) certifies for D11 and D13; (2,3,0) fails for p in {failed:?}")
    })?;
    Ok("(3,4,1) certifies for D11 and D13; (2,3,0) certifies for 7 <= p <= 31".into())
}

fn desk_scale_claim() -> Outcome {
    let cfg = OracleConfig::default();
    let mut failed = Vec::new();
    for p in table_primes(31).into_iter().filter(|&p| p >= 13) {
        let g = Group::dihedral(p).map_err(err)?;
        for (set, rule, (r, s, t)) in [
            ("a,ab^3,ab^4", Rule::ThreeRPlusS, (4, 0, 3)),
            ("a,ab^2,ab^3", Rule::ThreeRTwoS, (2, 3, 0)),
        ] {
            check_spec(p, r, s, t, rule).map_err(err)?;
            let elements = g.parse_elements(set).map_err(err)?;
            if !is_grr(g, &elements, Method::Closure, &cfg)
                .map_err(err)?
                .is_grr
            {
                failed.push(format!("D{p} {{{set}}}"));
            }
        }
    }
    ensure(failed.is_empty(), || {
        format!("not certified: {}", failed.join(", "))
    })?;
    Ok("both sets certify for 13 <= p <= 31".into())
}

fn negative_controls() -> Outcome {
    let d9 = Group::dihedral(9).map_err(err)?;
    ensure(check_spec(9, 0, 3, 6, Rule::ThreeRTwoS).is_err(), || {
        "D9 (0,3,6) accepted".into()
    })?;
    let p = closure(d9, &d9.parse_elements("a,ab^3,ab^6").map_err(err)?).map_err(err)?;
    ensure(!p.is_trivial(), || "D9 closure is trivial".into())?;
    let d5 = Group::dihedral(5).map_err(err)?;
    let set = d5.parse_elements("a,ab,ab^2").map_err(err)?;
    let cert = is_grr(d5, &set, Method::Oracle, &OracleConfig::default()).map_err(err)?;
    let order = cert.aut_order.map(|a| a.0).unwrap_or_default();
    ensure(order > BigUint::from(10u32) && !cert.is_grr, || {
        format!("D5 |Aut| = {order}")
    })?;
    Ok(format!("D9 closure rank {}; D5 |Aut| = {order}", p.rank()))
}

fn random_inverse_closed(rng: &mut ChaCha8Rng, g: Group) -> Vec<GroupElement> {
    loop {
        let mut s: Vec<GroupElement> = g
            .elements()
            .filter(|x| !x.is_identity() && rng.gen_bool(0.25))
            .flat_map(|x| [x, x.inv()])
            .collect();
        s.sort();
        s.dedup();
        if !s.is_empty() {
            return s;
        }
    }
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c4u64);
    let mut cases = 0;
    for n in [7, 9, 11] {
        let g = Group::dihedral(n).map_err(err)?;
        for _ in 0..80 {
            let c = random_inverse_closed(&mut rng, g);
            let p = closure(g, &c).map_err(err)?;
            p.validate().map_err(|v| format!("closure of {c:?}: {v}"))?;
            let beta = p.structure_constants().map_err(err)?;
            for i in 0..p.rank() {
                for j in 0..p.rank() {
                    let mass: u64 = (0..p.rank())
                        .map(|k| beta.get(i, j, k) * p.set(k).len() as u64)
                        .sum();
                    ensure(mass == (p.set(i).len() * p.set(j).len()) as u64, || {
                        format!("mass identity fails at ({i}, {j}) for {c:?}")
                    })?;
                }
            }
            let x = RingElement::from_terms(g, g.elements().map(|e| (rng.gen_range(-4i64..=4), e)))
                .map_err(err)?;
            let mut back = RingElement::zero(g);
            for (k, level) in x.level_sets() {
                back = back
                    .add(
                        &RingElement::simple_quantity(g, &level)
                            .map_err(err)?
                            .scale(k),
                    )
                    .map_err(err)?;
            }
            ensure(back == x, || format!("level sets of {x} do not reassemble"))?;
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} closures over D7, D9, D11: zero violations"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "worked example in D7", 1, worked_example),
        (2, "Z8 Schur ring and walk counts", 1, example_z8),
        (3, "table rows and closure certificates, p <= 97", 60, table),
        (
            4,
            "oracle |Aut| = 2p for p in {7, 11, 13, 17, 19}",
            30,
            oracle_cross_check,
        ),
        (5, "inheritability", 10, inheritance),
        (6, "two cubic sets for 13 <= p <= 31", 20, desk_scale_claim),
        (7, "negative controls", 5, negative_controls),
        (8, "property suites", 60, property_suites),
    ];
    let mut failures = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} criterion {id} ({name}) [{:.2} s]: {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
