//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use ordlen::oracle::{self, random_chain, random_instance, Chain, Profile};
use ordlen::{Cycle, Engine, Monomial, MonomialIdeal, Ordinal, PrimeSupport, Subquotient};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CHAIN_SEEDS: std::ops::Range<u64> = 0..200;
const INSTANCE_SEEDS: std::ops::Range<u64> = 1000..1200;

type Check = Result<(), String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens)
}

fn prime(n: usize, vars: &[usize]) -> PrimeSupport {
    PrimeSupport::new(n, vars.iter().copied())
}

fn omega_poly(terms: &[(u32, u32)]) -> Ordinal {
    Ordinal::from_terms(terms.iter().copied())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let e = Engine::new();
    let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
    let m = Subquotient::cyclic(i.clone());
    let len = e.length(&m);
    ensure(len == omega_poly(&[(2, 1), (1, 1)]), || {
        format!("len = {len}")
    })?;
    let ass = e.associated_primes(&m);
    ensure(ass == vec![prime(3, &[0]), prime(3, &[0, 1])], || {
        format!("Ass = {ass:?}")
    })?;
    let fcyc = e.fundamental_cycle(&m);
    let expected = Cycle::from_terms([(prime(3, &[0]), 1), (prime(3, &[0, 1]), 1)]);
    ensure(fcyc == expected, || format!("fcyc = {fcyc:?}"))?;
    let x = ideal(3, &[&[1, 0, 0]]);
    let sub = m.submodule(&x).map_err(|e| e.to_string())?;
    ensure(e.length(&sub) == Ordinal::omega(), || {
        "len (x)/I is not ω".into()
    })?;
    ensure(!e.is_open(&m, &x).unwrap(), || "(x) is open".into())?;
    let xy = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
    ensure(e.is_open(&m, &xy).unwrap(), || "(x,y) is not open".into())?;
    within(start, Duration::from_secs(1), "first golden example")
}

fn criterion_2() -> Check {
    let e = Engine::new();
    let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
    let m = Subquotient::cyclic(i.clone());
    let p = prime(3, &[0, 1]);
    let len = e.length(&m);
    ensure(len == omega_poly(&[(1, 3)]), || format!("len = {len}"))?;
    let fcyc = e.fundamental_cycle(&m);
    ensure(fcyc == Cycle::from_terms([(p.clone(), 3)]), || {
        format!("fcyc = {fcyc:?}")
    })?;
    let sub = m.submodule(&p.ideal()).map_err(|e| e.to_string())?;
    let len_p = e.length(&sub);
    ensure(len_p == omega_poly(&[(1, 2)]), || {
        format!("len p/I = {len_p}")
    })?;
    let rp = e.length(&Subquotient::cyclic(p.ideal()));
    ensure(rp == Ordinal::omega(), || format!("len R/p = {rp}"))
}

fn criterion_3() -> Check {
    let e = Engine::new();
    let i = ideal(2, &[&[2, 0], &[1, 1]]);
    let m = Subquotient::cyclic(i.clone());
    let len = e.length(&m);
    ensure(len == omega_poly(&[(1, 1), (0, 1)]), || {
        format!("len = {len}")
    })?;
    let x = ideal(2, &[&[1, 0]]);
    let c = e.closure(&m, &i).map_err(|e| e.to_string())?;
    ensure(c == x, || format!("closure of zero = {c}"))?;
    let witnesses = [
        i.clone(),
        x.clone(),
        ideal(2, &[&[2, 0], &[0, 1]]),
        ideal(2, &[&[1, 0], &[0, 1]]),
        ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
        ideal(2, &[&[1, 0], &[0, 2]]),
        ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]),
        MonomialIdeal::unit(2),
    ];
    let closed_not_open: Vec<&MonomialIdeal> = witnesses
        .iter()
        .filter(|k| e.is_closed(&m, k).unwrap() && !e.is_open(&m, k).unwrap())
        .collect();
    ensure(closed_not_open == vec![&x], || {
        format!("closed non-open witnesses: {closed_not_open:?}")
    })
}

fn criterion_4() -> Check {
    let e = Engine::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let n = rng.gen_range(1..=5usize);
        let vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let p = prime(n, &vars);
        let m = Subquotient::cyclic(p.ideal());
        let len = e.length(&m);
        let expected = Ordinal::omega_pow((n - vars.len()) as u32);
        ensure(len == expected, || {
            format!("len R/{} = {len}, expected {expected}", p.ideal())
        })?;
        let val = e.basic_invariants(&m).valence;
        ensure(val == 1, || format!("valence of R/{} is {val}", p.ideal()))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let e = Engine::new();
    let mut artinian = 0;
    for seed in INSTANCE_SEEDS {
        let m = random_instance(seed, Profile::DEFAULT);
        for p in oracle::all_primes(m.ambient()) {
            let (a, b) = (e.local_multiplicity(&m, &p), oracle::oracle_lcl(&m, &p));
            ensure(a == b, || {
                format!("seed {seed}, prime {p:?}: {a} vs oracle {b}")
            })?;
        }
        if oracle::is_artinian(&m) {
            artinian += 1;
            let count = oracle::oracle_artinian_length(&m).map_err(|e| e.to_string())?;
            ensure(e.length(&m) == Ordinal::finite(count), || {
                format!("seed {seed}: artinian length {} vs {count}", e.length(&m))
            })?;
        }
    }
    ensure(artinian > 0, || "no Artinian instance in the corpus".into())?;
    within(start, Duration::from_secs(60), "oracle equivalence")
}

fn chains() -> impl Iterator<Item = (u64, Chain)> {
    CHAIN_SEEDS.map(|s| (s, random_chain(s, Profile::DEFAULT)))
}

fn criterion_6() -> Check {
    let e = Engine::new();
    for (seed, c) in chains() {
        let m = c.module();
        let sub = m.submodule(&c.middle).unwrap();
        let quot = m.quotient(&c.middle).unwrap();
        let (mu, nu, theta) = (e.length(&m), e.length(&sub), e.length(&quot));
        let fail = |what: &str| format!("seed {seed}: {what} (μ={mu}, ν={nu}, θ={theta})");
        ensure(theta.cantor_sum(&nu) <= mu, || fail("θ + ν ≤ μ"))?;
        ensure(mu <= theta.shuffle_sum(&nu), || fail("μ ≤ θ ⊕ ν"))?;
        ensure(theta.cantor_sum(&nu).weaker(&mu), || fail("θ + ν ⪯ μ"))?;
        ensure(nu.weaker(&mu), || fail("ν ⪯ μ"))?;
        ensure(
            e.fundamental_cycle(&sub).leq(&e.fundamental_cycle(&m)),
            || fail("fcyc N ≤ fcyc M"),
        )?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let e = Engine::new();
    for (seed, c) in chains() {
        let m = c.module();
        let mu = e.length(&m);
        let top = mu.degree().map_or(-1, i64::from);
        let mut prev = e.dimension_filtration(&m, -1);
        ensure(prev.is_zero(), || format!("seed {seed}: D_-1 is not zero"))?;
        let mut total = Ordinal::zero();
        for d in 0..=top {
            let cur = e.dimension_filtration(&m, d);
            let len = e.length(&cur);
            ensure(len == mu.truncate_below(d), || {
                format!("seed {seed}: len D_{d} = {len}, μ = {mu}")
            })?;
            let step = Subquotient::new(prev.upper().clone(), cur.upper().clone())
                .map_err(|_| format!("seed {seed}: D_{} ⊄ D_{d}", d - 1))?;
            if !step.is_zero() {
                let b = e.basic_invariants(&step);
                ensure(b.is_unmixed && b.dimension == Some(d as u32), || {
                    format!(
                        "seed {seed}: D_{d}/D_{} is not unmixed of dimension {d}",
                        d - 1
                    )
                })?;
            }
            total = total.shuffle_sum(&e.length(&step));
            prev = cur;
        }
        ensure(prev.upper() == m.upper(), || {
            format!("seed {seed}: D_top ≠ M")
        })?;
        ensure(total == mu, || {
            format!("seed {seed}: ⊕ len D_i/D_(i-1) = {total}, μ = {mu}")
        })?;
    }
    Ok(())
}

/// Submodules of `m` tried in the topology checks.
fn test_submodules(e: &Engine, c: &Chain) -> Vec<MonomialIdeal> {
    let m = c.module();
    let n = m.ambient();
    let maxim = MonomialIdeal::generated_by_vars(n, &(0..n).collect::<Vec<_>>());
    let mut out = vec![c.lower.clone(), c.middle.clone(), c.upper.clone()];
    let shrunk = c.upper.product(&maxim).unwrap().sum(&c.lower).unwrap();
    out.push(shrunk.clone());
    out.push(shrunk.product(&maxim).unwrap().sum(&c.lower).unwrap());
    let mu = e.length(&m);
    for i in -1..=mu.degree().map_or(-1, i64::from) {
        out.push(
            e.construct_submodule_of_length(&m, &mu.truncate_above(i))
                .unwrap(),
        );
    }
    out.sort_by_key(|k| k.to_string());
    out.dedup();
    out
}

/// Maximal monomial submodules: drop one generator `g ∉ I` of `J` and keep
/// `g·𝔪`.
fn maximal_submodules(m: &Subquotient) -> Vec<MonomialIdeal> {
    let n = m.ambient();
    let maxim = MonomialIdeal::generated_by_vars(n, &(0..n).collect::<Vec<_>>());
    m.upper()
        .gens()
        .iter()
        .filter(|g| !m.lower().contains(g))
        .map(|g| {
            let others = m.upper().gens().iter().filter(|h| h != &g).cloned();
            let g_max = MonomialIdeal::new(n, [g.clone()]).product(&maxim).unwrap();
            MonomialIdeal::new(n, others)
                .sum(&g_max)
                .unwrap()
                .sum(m.lower())
                .unwrap()
        })
        .collect()
}

fn topology_on(e: &Engine, seed: u64, c: &Chain) -> Check {
    let m = c.module();
    let mu = e.length(&m);
    let inv = e.basic_invariants(&m);
    let ks = test_submodules(e, c);
    let fail = |k: &MonomialIdeal, what: &str| format!("seed {seed}, K = {k}: {what}");
    let is_open = |k: &MonomialIdeal| e.is_open(&m, k).unwrap();

    for k in &ks {
        let sub = m.submodule(k).unwrap();
        let quot = m.quotient(k).unwrap();
        let open = is_open(k);
        // openness via length, cycle and valence
        ensure(open == (e.length(&sub) == mu), || fail(k, "open vs length"))?;
        ensure(
            open == (e.fundamental_cycle(&sub) == e.fundamental_cycle(&m)),
            || fail(k, "open vs cycle"),
        )?;
        ensure(
            open == (e.basic_invariants(&sub).valence == inv.valence),
            || fail(k, "open vs valence"),
        )?;
        let dim_q = e.basic_invariants(&quot).dimension;
        // small quotient dimension forces openness
        if let (Some(dq), Some(ord_m)) = (dim_q, inv.order) {
            ensure(dq >= ord_m || open, || {
                fail(k, "dim(M/K) < ord M but not open")
            })?;
        }
        // open iff the quotient has lower dimension, converse when unmixed
        if let Some(dim_m) = inv.dimension {
            let low = dim_q.is_none_or(|dq| dq < dim_m);
            ensure(!open || low, || fail(k, "open but dim(M/K) = dim M"))?;
            if inv.is_unmixed {
                ensure(!low || open, || {
                    fail(k, "unmixed, dim(M/K) < dim M, not open")
                })?;
            }
        }
        // closure laws
        let cl = e.closure(&m, k).unwrap();
        ensure(k.is_subset(&cl), || fail(k, "closure not extensive"))?;
        ensure(e.closure(&m, &cl).unwrap() == cl, || {
            fail(k, "closure not idempotent")
        })?;
        let closed = e.is_closed(&m, k).unwrap();
        ensure(
            closed == (e.finitistic_length(&sub) == e.finitistic_length(&m)),
            || fail(k, "closed vs finitistic length"),
        )?;
        // positive order: every submodule closed
        if inv.order.is_some_and(|o| o > 0) {
            ensure(closed, || fail(k, "positive order but not closed"))?;
        }
        // preimage under multiplication by a monomial
        if open && m.is_cyclic() {
            for r in multipliers(m.ambient()) {
                let lower = m.lower().colon_monomial(&r);
                let pre = k.colon_monomial(&r);
                let src = Subquotient::cyclic(lower);
                ensure(e.is_open(&src, &pre).unwrap(), || {
                    fail(k, &format!("(K:{r:?}) not open in R/(I:{r:?})"))
                })?;
            }
        }
    }
    for k1 in &ks {
        for k2 in &ks {
            let both = k1.intersection(k2).unwrap();
            if k1.is_subset(k2) {
                ensure(
                    e.closure(&m, k1)
                        .unwrap()
                        .is_subset(&e.closure(&m, k2).unwrap()),
                    || fail(k1, "closure not monotone"),
                )?;
            }
            // finite intersections of opens
            if is_open(k1) && is_open(k2) {
                ensure(is_open(&both), || fail(k1, &format!("∩ {k2} not open")))?;
            }
        }
    }
    // i-opens are conjunctive and restrict to i-opens
    let top = mu.degree().map_or(-1, i64::from);
    for i in -1..=top {
        for u in ks.iter().filter(|u| e.is_i_open(&m, u, i).unwrap()) {
            for h in &ks {
                let (lhs, rhs) = e.intersection_length(&m, u, h).unwrap();
                ensure(lhs == rhs, || {
                    fail(
                        u,
                        &format!("{i}-open, H = {h}: len ∩ = {lhs}, meet = {rhs}"),
                    )
                })?;
                let w = Subquotient::new(m.lower().clone(), h.clone()).unwrap();
                let cap = u.intersection(h).unwrap();
                ensure(e.is_i_open(&w, &cap, i).unwrap(), || {
                    fail(u, &format!("{i}-open, ∩ {h} not {i}-open in W"))
                })?;
            }
        }
    }
    // maximal submodules in positive order
    if inv.order.is_some_and(|o| o > 0) {
        for k in maximal_submodules(&m) {
            ensure(
                m.quotient(&k)
                    .map(|q| e.length(&q) == Ordinal::one())
                    .unwrap_or(false),
                || fail(&k, "not maximal"),
            )?;
            ensure(is_open(&k), || fail(&k, "maximal submodule not open"))?;
        }
    }
    // bounded essentiality; inconclusive results are not failures
    let (b, b2) = e.essentiality_bounds(&m);
    for k in ks.iter().filter(|k| is_open(k)) {
        e.essentiality_check(&m, k, b, b2)
            .map_err(|err| fail(k, &err.to_string()))?;
    }
    Ok(())
}

/// Each variable and the product of all variables.
fn multipliers(n: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..n).map(|v| Monomial::var(n, v)).collect();
    out.push(Monomial::new(vec![1; n]));
    out
}

fn criterion_8() -> Check {
    let e = Engine::new();
    for (seed, c) in chains() {
        topology_on(&e, seed, &c)?;
    }
    Ok(())
}

fn all_small_ordinals() -> Vec<Ordinal> {
    let mut out = Vec::with_capacity(256);
    for code in 0..256u32 {
        let terms = (0..4).map(|e| (e, (code >> (2 * e)) & 3));
        out.push(Ordinal::from_terms(terms));
    }
    out
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let all = all_small_ordinals();
    let zero = Ordinal::zero();
    for a in &all {
        ensure(
            a.shuffle_sum(&zero) == *a && a.cantor_sum(&zero) == *a,
            || format!("{a}: zero is not neutral"),
        )?;
        for i in -1..4 {
            ensure(
                a.truncate_above(i).shuffle_sum(&a.truncate_below(i)) == *a,
                || format!("{a}: truncations at {i} do not split"),
            )?;
        }
        for b in &all {
            let (cs, ss, meet) = (a.cantor_sum(b), a.shuffle_sum(b), a.meet(b));
            let fail = |what: &str| format!("a = {a}, b = {b}: {what}");
            ensure(ss == b.shuffle_sum(a), || fail("⊕ not commutative"))?;
            ensure(cs <= ss, || fail("a + b > a ⊕ b"))?;
            let criterion = match (a.ord(), b.degree()) {
                (Some(o), Some(d)) => d <= o,
                _ => true,
            };
            ensure((cs == ss) == criterion, || fail("+ = ⊕ criterion"))?;
            for e in 0..4 {
                let expected = a.coeff(e).min(b.coeff(e));
                ensure(meet.coeff(e) == expected, || {
                    fail("meet is not the coefficient minimum")
                })?;
            }
            ensure(meet.weaker(a) && meet.weaker(b), || {
                fail("meet not below both")
            })?;
            let weaker = (0..4).all(|e| a.coeff(e) <= b.coeff(e));
            ensure(a.weaker(b) == weaker, || fail("⪯ is not coefficient-wise"))?;
            if a.weaker(b) {
                ensure(a.leq(b), || fail("a ⪯ b but a > b"))?;
                let diff = a.shuffle_difference(b);
                ensure(diff.is_some_and(|d| a.shuffle_sum(&d) == *b), || {
                    fail("no ⊕ witness")
                })?;
                if b.weaker(a) {
                    ensure(a == b, || fail("⪯ not antisymmetric"))?;
                }
            }
            ensure(a.leq(b) == (a <= b), || fail("leq disagrees with Ord"))?;
        }
    }
    // associativity on the binary ordinals, all triples
    let binary: Vec<&Ordinal> = all
        .iter()
        .filter(|o| (0..4).all(|e| o.coeff(e) <= BigUint::from(1u32)))
        .collect();
    for a in &binary {
        for b in &binary {
            for c in &binary {
                ensure(
                    a.cantor_sum(b).cantor_sum(c) == a.cantor_sum(&b.cantor_sum(c)),
                    || format!("+ not associative on {a}, {b}, {c}"),
                )?;
                ensure(
                    a.shuffle_sum(b).shuffle_sum(c) == a.shuffle_sum(&b.shuffle_sum(c)),
                    || format!("⊕ not associative on {a}, {b}, {c}"),
                )?;
            }
        }
    }
    within(start, Duration::from_secs(5), "ordinal suite")
}

fn criterion_10() -> Check {
    for name in common::GOLDEN {
        for (flags, ext) in [(&[][..], "txt"), (&["--json"][..], "jsonl")] {
            if let Some(diff) = common::golden_mismatch(name, flags, ext) {
                return Err(diff);
            }
        }
    }
    ensure(common::ERROR_CORPUS.len() >= 6, || {
        "error corpus too small".into()
    })?;
    for (script, flags, env, code) in common::ERROR_CORPUS {
        let out = common::run_script(script, flags, env);
        ensure(out.status.code() == Some(*code), || {
            format!("{script:?}: exit {:?}, expected {code}", out.status.code())
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        (
            "golden example: R/(x^2, xy) in three variables",
            criterion_1,
        ),
        ("golden example: square of a height two prime", criterion_2),
        (
            "golden example: adic topology on k[x,y]/(x^2, xy)",
            criterion_3,
        ),
        ("domain law on 50 random monomial primes", criterion_4),
        ("oracle equivalence on 200 seeded instances", criterion_5),
        ("semi-additivity on 200 seeded chains", criterion_6),
        ("dimension filtration on 200 seeded chains", criterion_7),
        ("topology suite on 200 seeded chains", criterion_8),
        (
            "exhaustive ordinal algebra, degree and coefficients at most 3",
            criterion_9,
        ),
        ("CLI golden output and exit codes", criterion_10),
    ];
    let mut failed = 0;
    for (k, (desc, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {desc} ({took:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {desc} ({took:.2?}): {msg}", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
