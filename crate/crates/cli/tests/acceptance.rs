//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Expected values come from oracles defined here (Leibniz determinants,
//! brute-force ideals and order searches), not from the library under test.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use semigroup_norm::matrix::{generalized_inverse, rank, RatMatrix};
use semigroup_norm::minor_norm::{cauchy_binet, nu_k, MinorNormParams};
use semigroup_norm::{catalog, green_structure, natural_order, FiniteSemigroup};

type Q = BigRational;

// ---------- matrix oracles ----------

#[derive(Clone)]
struct M {
    r: usize,
    c: usize,
    e: Vec<Q>,
}

impl M {
    fn at(&self, i: usize, j: usize) -> &Q {
        &self.e[i * self.c + j]
    }

    fn lib(&self) -> RatMatrix {
        RatMatrix::new(self.r, self.c, self.e.clone()).unwrap()
    }

    fn of(m: &RatMatrix) -> M {
        M {
            r: m.rows(),
            c: m.cols(),
            e: m.entries().to_vec(),
        }
    }
}

fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

fn rand_m(rng: &mut ChaCha8Rng, r: usize, c: usize) -> M {
    M {
        r,
        c,
        e: (0..r * c).map(|_| rand_q(rng)).collect(),
    }
}

fn mul(a: &M, b: &M) -> M {
    assert_eq!(a.c, b.r);
    let mut e = Vec::with_capacity(a.r * b.c);
    for i in 0..a.r {
        for j in 0..b.c {
            let mut s = Q::zero();
            for t in 0..a.c {
                s += a.at(i, t) * b.at(t, j);
            }
            e.push(s);
        }
    }
    M { r: a.r, c: b.c, e }
}

fn transpose(a: &M) -> M {
    M {
        r: a.c,
        c: a.r,
        e: (0..a.c * a.r).map(|x| a.at(x % a.r, x / a.r).clone()).collect(),
    }
}

/// Square `n×n` matrix of prescribed rank `r` as a product `(n×r)(r×n)`.
fn rand_rank(rng: &mut ChaCha8Rng, n: usize, r: usize) -> M {
    if r == 0 {
        return M {
            r: n,
            c: n,
            e: vec![Q::zero(); n * n],
        };
    }
    mul(&rand_m(rng, n, r), &rand_m(rng, r, n))
}

fn rand_mixed(rng: &mut ChaCha8Rng, n: usize) -> M {
    let r = rng.gen_range(0..=n);
    rand_rank(rng, n, r)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion.
fn leibniz(a: &M, rows: &[usize], cols: &[usize]) -> Q {
    let k = rows.len();
    let mut total = Q::zero();
    for p in permutations(k) {
        let mut term = Q::from_integer(BigInt::from(sign(&p)));
        for i in 0..k {
            term *= a.at(rows[i], cols[p[i]]);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn choose(n: usize, k: usize) -> Q {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(c)
}

fn oracle_nu(a: &M, k: usize) -> Q {
    let n = a.r;
    let mut best = Q::zero();
    for rows in subsets(n, k) {
        for cols in subsets(n, k) {
            let d = leibniz(a, &rows, &cols).abs();
            if d > best {
                best = d;
            }
        }
    }
    choose(n, k) * best
}

/// Largest order of a nonvanishing minor.
fn oracle_rank(a: &M) -> usize {
    (1..=a.r.min(a.c))
        .rev()
        .find(|&k| {
            subsets(a.r, k)
                .iter()
                .any(|rows| subsets(a.c, k).iter().any(|cols| !leibniz(a, rows, cols).is_zero()))
        })
        .unwrap_or(0)
}

fn lib_nu(a: &M, k: usize) -> Q {
    nu_k(&a.lib(), MinorNormParams::new(a.r, k).unwrap()).unwrap()
}

// ---------- semigroup oracles ----------

/// Products in S¹, with the adjoined identity at index `n`.
fn s1(s: &FiniteSemigroup) -> impl Fn(usize, usize) -> usize + '_ {
    let n = s.order();
    move |x, y| {
        if x == n {
            y
        } else if y == n {
            x
        } else {
            s.mul(x, y)
        }
    }
}

fn relation(n: usize, f: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

fn is_equivalence(r: &[Vec<bool>]) -> bool {
    let n = r.len();
    (0..n).all(|a| r[a][a])
        && (0..n).all(|a| (0..n).all(|b| r[a][b] == r[b][a]))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(r[a][b] && r[b][c]) || r[a][c])))
}

struct GreenOracle {
    r: Vec<Vec<bool>>,
    l: Vec<Vec<bool>>,
    h: Vec<Vec<bool>>,
    d: Vec<Vec<bool>>,
}

fn green_oracle(s: &FiniteSemigroup) -> GreenOracle {
    let n = s.order();
    let m = s1(s);
    let right: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|x| (0..=n).any(|t| m(a, t) == x)).collect()).collect();
    let left: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|x| (0..=n).any(|t| m(t, a) == x)).collect()).collect();
    let r = relation(n, |a, b| right[a] == right[b]);
    let l = relation(n, |a, b| left[a] == left[b]);
    let h = relation(n, |a, b| r[a][b] && l[a][b]);
    let d = relation(n, |a, b| (0..n).any(|c| r[a][c] && l[c][b]));
    GreenOracle { r, l, h, d }
}

fn order_oracle(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    let n = s.order();
    let m = s1(s);
    relation(n, |a, b| {
        (0..=n).any(|x| (0..=n).any(|y| m(x, b) == a && m(b, y) == a && m(x, a) == a))
    })
}

// ---------- CLI ----------

fn sgnorm(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_sgnorm")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn sgnorm_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = sgnorm(args);
    (code, serde_json::from_slice(&out).unwrap())
}

// ---------- criteria ----------

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_submultiplicativity() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checks = 0;
    for n in 2..=5 {
        for _ in 0..200 {
            let a = rand_mixed(&mut rng, n);
            let b = rand_mixed(&mut rng, n);
            let ab = mul(&a, &b);
            for k in 1..=n {
                let (na, nb, nab) = (lib_nu(&a, k), lib_nu(&b, k), lib_nu(&ab, k));
                ensure(nab <= &na * &nb, || format!("n={n} k={k}: ν(ab) = {nab} > {na}·{nb}"))?;
                checks += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    // the library values agree with the Leibniz oracle on a subsample
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5 {
        for _ in 0..10 {
            let a = rand_m(&mut rng, n, n);
            for k in 1..=n {
                ensure(lib_nu(&a, k) == oracle_nu(&a, k), || format!("ν_{k} disagrees with oracle, n={n}"))?;
            }
        }
    }
    Ok(format!("{checks} (pair, k) checks, 0 violations, {secs:.1}s"))
}

fn c2_cauchy_binet() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut shapes = 0;
    for n in 1..=6 {
        for k in 1..=n {
            shapes += 1;
            for _ in 0..200 {
                let alpha = rand_m(&mut rng, k, n);
                let beta = rand_m(&mut rng, n, k);
                let (lhs, rhs) = cauchy_binet(&alpha.lib(), &beta.lib()).unwrap();
                let all: Vec<usize> = (0..k).collect();
                let oracle_lhs = leibniz(&mul(&alpha, &beta), &all, &all);
                let oracle_rhs = subsets(n, k).iter().fold(Q::zero(), |acc, p| {
                    acc + leibniz(&alpha, &all, p) * leibniz(&beta, p, &all)
                });
                ensure(lhs == rhs, || format!("k={k} n={n}: lhs {lhs} != rhs {rhs}"))?;
                ensure(lhs == oracle_lhs && rhs == oracle_rhs, || format!("k={k} n={n}: oracle mismatch"))?;
            }
        }
    }
    Ok(format!("{shapes} shapes × 200 pairs, 0 violations"))
}

fn c3_special_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ranks = [0usize; 6];
    for n in 2..=5 {
        for _ in 0..100 {
            let a = rand_mixed(&mut rng, n);
            let all: Vec<usize> = (0..n).collect();
            let det = leibniz(&a, &all, &all).abs();
            ensure(lib_nu(&a, n) == det, || format!("n={n}: ν_n != |det|"))?;
            let max = a.e.iter().map(|x| x.abs()).max().unwrap();
            ensure(lib_nu(&a, 1) == Q::from_integer(BigInt::from(n)) * max, || format!("n={n}: ν_1 != n·max"))?;
            let r = rank(&a.lib());
            ensure(r == oracle_rank(&a), || format!("n={n}: rank {r} disagrees with oracle"))?;
            ranks[r] += 1;
            for k in 1..=n {
                ensure(lib_nu(&a, k).is_zero() == (r < k), || format!("n={n} k={k} rank={r}: zero test wrong"))?;
            }
        }
    }
    Ok(format!("400 matrices, rank histogram {:?}", ranks))
}

fn c4_witness() -> Outcome {
    for k in [1usize, 2] {
        let ks = k.to_string();
        let (code, v) = sgnorm_json(&["witness", "--n", "3", "--k", &ks, "--m-max", "10"]);
        ensure(code == 0, || format!("k={k}: exit {code}"))?;
        let rows = v["sequence"].as_array().unwrap();
        ensure(rows.len() == 10, || format!("k={k}: {} rows", rows.len()))?;
        for row in rows {
            let m = row["m"].as_u64().unwrap() as i64;
            let expected = choose(3, k) / Q::from_integer(BigInt::from(m).pow(k as u32));
            let got = semigroup_norm::rational::parse_rat(row["nu_k"].as_str().unwrap()).unwrap();
            ensure(got == expected, || format!("k={k} m={m}: ν_k = {got}, expected {expected}"))?;
            ensure(row["rank"] == k, || format!("k={k} m={m}: rank {}", row["rank"]))?;
        }
        ensure(v["nu_k_limit"] == "0/1", || format!("k={k}: limit {}", v["nu_k_limit"]))?;
        ensure(v["n_k_not_closed"] == true, || format!("k={k}: conclusion flag unset"))?;
    }
    Ok("k = 1, 2 with m = 1..10: closed form exact, limit 0, flag set, exit 0".into())
}

fn c5_generalized_inverse() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bounds = 0;
    for n in 2..=4 {
        for _ in 0..100 {
            let a = rand_mixed(&mut rng, n);
            let g = M::of(&generalized_inverse(&a.lib()).unwrap());
            ensure(mul(&mul(&a, &g), &a).e == a.e, || format!("n={n}: aga != a"))?;
            ensure(mul(&mul(&g, &a), &g).e == g.e, || format!("n={n}: gag != g"))?;
            let (ag, ga) = (mul(&a, &g), mul(&g, &a));
            ensure(transpose(&ag).e == ag.e && transpose(&ga).e == ga.e, || format!("n={n}: ag or ga not symmetric"))?;
            for k in 1..=oracle_rank(&a) {
                let (na, ng) = (lib_nu(&a, k), lib_nu(&g, k));
                ensure(&na * &ng >= Q::one(), || format!("n={n} k={k}: ν(g)·ν(a) = {} < 1", &na * &ng))?;
                bounds += 1;
            }
        }
    }
    Ok(format!("300 matrices, {bounds} bound checks, 0 violations"))
}

fn c6_fuzz() -> Outcome {
    let (mut runs, mut applicable, mut fails) = (0, 0, 0);
    for name in catalog::NAMES {
        for seed in ["1", "2", "3"] {
            let (code, v) = sgnorm_json(&["fuzz", name, "--count", "50", "--seed", seed]);
            ensure(v["accepted"] == 50, || format!("{name} seed {seed}: accepted {}", v["accepted"]))?;
            let run_fails = v["fail_count"].as_u64().unwrap();
            ensure(code == if run_fails == 0 { 0 } else { 1 }, || format!("{name} seed {seed}: exit {code}"))?;
            fails += run_fails;
            runs += v["checker_runs"].as_u64().unwrap();
            applicable += v["applicable_runs"].as_u64().unwrap();
        }
    }
    ensure(fails == 0, || format!("{fails} FAIL verdicts"))?;
    ensure(applicable >= 1050, || format!("only {applicable} applicable runs"))?;
    Ok(format!("21 runs × 50 norms: {runs} checker runs, {applicable} applicable, 0 FAIL"))
}

fn c7_green() -> Outcome {
    for n in [2usize, 3] {
        let maps = catalog::transformation_maps(n);
        let s = catalog::full_transformation(n);
        // element i is maps[i]; products compose left to right
        for (i, f) in maps.iter().enumerate() {
            for (j, g) in maps.iter().enumerate() {
                let fg: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                ensure(maps[s.mul(i, j)] == fg, || format!("T{n}: {i}·{j} is not the composite"))?;
            }
        }
        let image = |f: &Vec<usize>| f.iter().collect::<std::collections::BTreeSet<_>>().len();
        let mut by_image = std::collections::BTreeMap::new();
        for f in &maps {
            *by_image.entry(image(f)).or_insert(0usize) += 1;
        }
        let mut expected: Vec<usize> = by_image.values().copied().collect();
        expected.sort_unstable();
        let g = green_structure(&s);
        let mut sizes = g.d_classes.sizes();
        sizes.sort_unstable();
        ensure(sizes == expected, || format!("T{n}: D sizes {sizes:?}, oracle {expected:?}"))?;
        for class in &g.d_classes.classes {
            let first = image(&maps[class.first().unwrap()]);
            ensure(class.iter().all(|x| image(&maps[x]) == first), || format!("T{n}: mixed image sizes"))?;
        }
    }
    for (name, s) in catalog::suite() {
        let o = green_oracle(&s);
        let g = green_structure(&s);
        for (label, rel, part) in [
            ("R", &o.r, &g.r_classes),
            ("L", &o.l, &g.l_classes),
            ("H", &o.h, &g.h_classes),
            ("D", &o.d, &g.d_classes),
        ] {
            ensure(is_equivalence(rel), || format!("{name}: oracle {label} not an equivalence"))?;
            let lib = relation(s.order(), |a, b| part.related(a, b));
            ensure(&lib == rel, || format!("{name}: {label} differs from brute force"))?;
        }
    }
    Ok("t2 D sizes [2, 2], t3 D sizes [3, 6, 18]; R, L, H, D match brute force on 7 semigroups".into())
}

fn c8_natural_order() -> Outcome {
    for (name, s) in catalog::suite() {
        let n = s.order();
        let oracle = order_oracle(&s);
        let rel = natural_order(&s);
        let lib = relation(n, |a, b| rel.leq(a, b));
        ensure(lib == oracle, || format!("{name}: differs from brute force"))?;
        let reflexive = (0..n).all(|a| lib[a][a]);
        let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(lib[a][b] && lib[b][a])));
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lib[a][b] && lib[b][c]) || lib[a][c])));
        ensure(reflexive && antisymmetric && transitive, || format!("{name}: not a partial order"))?;
        if s.is_group() {
            ensure((0..n).all(|a| (0..n).all(|b| lib[a][b] == (a == b))), || format!("{name}: group order not equality"))?;
        }
    }
    Ok("partial order on 7 semigroups, equality on z2, c4, s3".into())
}

fn c9_determinism() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let matrix = dir.path().join("a.txt");
    std::fs::write(&matrix, "3 3\n1 2 0\n0 1/2 3\n4 0 -1\n").unwrap();
    let matrix = matrix.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["validate", "t3"],
        vec!["analyze", "t3"],
        vec!["norm-check", "s3", "one"],
        vec!["fuzz", "t3", "--count", "20", "--seed", "3"],
        vec!["fuzz", "c4", "--count", "30", "--seed", "7", "--pool", "0,1/3,1,3"],
        vec!["minor-norm", matrix, "--k", "2"],
        vec!["minor-norm", matrix, "--k", "2", "--mode", "float"],
        vec!["witness", "--n", "4", "--k", "2", "--m-max", "6"],
    ];
    for args in &invocations {
        let (c1, first) = sgnorm(args);
        let (c2, second) = sgnorm(args);
        ensure(c1 == c2 && first == second, || format!("`{}` differs between runs", args.join(" ")))?;
        ensure(serde_json::from_slice::<Value>(&first).is_ok(), || format!("`{}` is not JSON", args.join(" ")))?;
    }
    Ok(format!("{} invocations byte-identical across repeated runs", invocations.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("ν_k submultiplicative at scale", c1_submultiplicativity),
        ("Cauchy–Binet identity", c2_cauchy_binet),
        ("ν_n = |det|, ν_1 = n·max, ν_k = 0 iff rank < k", c3_special_cases),
        ("witness sequence, N_k not closed", c4_witness),
        ("generalized inverse and ν_k(g) ≥ 1/ν_k(a)", c5_generalized_inverse),
        ("structural laws over fuzzed norms", c6_fuzz),
        ("Green structure", c7_green),
        ("natural order well-formed", c8_natural_order),
        ("deterministic JSON", c9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
