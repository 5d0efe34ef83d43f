//! Acceptance run: one line per criterion. All comparisons are exact
//! (zero tolerance); the time limits are wall-clock bounds per criterion.

mod support;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use homhopf::double::{
    double_report, drinfeld_double, dual_algebra, functor_f, functor_g, DrinfeldDouble,
};
use homhopf::hom::{check_hom_algebra, check_hom_hopf, check_quasitriangular, HomHopfAlgebra};
use homhopf::io::catalog::{alpha_minus, catalog, catalog_get, group_algebra, sweedler_h4};
use homhopf::linalg::{invert_linear_map, Field, LinMap, Scalar, Tensor};
use homhopf::modules::{check_bimodule, check_yetter_drinfeld, split_null_extension, twist_bimodule, yd_report, Bimodule, LeftModule, YDModule};
use homhopf::report::{AxiomReport, Witness};
use homhopf::smash::{
    diagonal_report, diagonal_twisting_principle, invert_q_report, lr_smash_data, lr_smash_twisting_principle,
    q_inverse_closed_form, two_sided_report, two_sided_twisting,
};
use homhopf::twisted::{
    check_lr_data, check_twisting_map, factorization_report, lr_twisted_tensor_product, regroup_report,
    twist_lr_coincidence, twisted_tensor_product, LRData, TwistingMap,
};

use support::oracle::{Pair, Qt, Sides, Yd};
use support::{bump, Lcg};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lib<T>(r: homhopf::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn passing(r: &AxiomReport, what: &str) -> Result<(), String> {
    ensure(r.passed(), format!("{what}: {}", r.first_failure_summary()))
}

fn twisted_h4() -> Arc<HomHopfAlgebra> {
    Arc::new(catalog_get("h4-sweedler-twisted").expect("catalog"))
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool").install(f)
}

// 1 -----------------------------------------------------------------------

const DERIVED_HOPF: [&str; 6] = ["antunit", "antcounit", "antialg", "anticoalg", "invant-left", "invant-right"];

fn hopf_suite() -> Outcome {
    let mut slowest = Duration::ZERO;
    let entries = catalog();
    for (name, h) in &entries {
        let t = Instant::now();
        let r = lib(check_hom_hopf(h))?;
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        passing(&r, name)?;
        for id in DERIVED_HOPF {
            ensure(r.entries.iter().any(|e| e.id.rsplit('.').next() == Some(id)), format!("{name}: no {id} entry"))?;
        }
        ensure(dt < Duration::from_secs(1), format!("{name} took {dt:.2?}"))?;
    }
    Ok(format!("{} entries pass, derived identities included; slowest {slowest:.2?}", entries.len()))
}

// 2 -----------------------------------------------------------------------

fn twisting_principles() -> Outcome {
    let h = sweedler_h4();
    let d = lib(dual_algebra(Arc::new(h.clone()), 0, 0))?;
    let x = d.bimodule_algebra();
    let am = alpha_minus();
    let beta = am.transpose();
    let data = lib(lr_smash_data(x))?;
    let lr = lib(twist_lr_coincidence(&data, &beta, &am))?;
    passing(&lr, "L-R twisted product")?;
    let smash = lib(lr_smash_twisting_principle(x, &am, &beta))?;
    passing(&smash, "L-R smash")?;
    let diag = lib(diagonal_twisting_principle(x, &h, &am, &beta))?;
    passing(&diag, "diagonal crossed product")?;
    for r in [&lr, &smash, &diag] {
        ensure(r.holds("coincide-mu") && r.holds("coincide-alpha"), format!("{}: coincidence entries missing", r.subject))?;
    }
    Ok("L-R twisted product, L-R smash and diagonal crossed product coincide".into())
}

// 3 -----------------------------------------------------------------------

fn kron_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

fn factorization() -> Outcome {
    let h = twisted_h4();
    let d = lib(dual_algebra(h, 0, 0))?;
    let data = lib(lr_smash_data(d.bimodule_algebra()))?;
    let (p, rep) = lib(factorization_report(&data))?;
    passing(&rep, "factorization report")?;
    let q_inv = lib(invert_linear_map(data.q()))?;
    ensure(p.map() == &lib(q_inv.compose(data.r()))?, "P differs from Q⁻¹∘R")?;
    passing(&check_twisting_map(&p), "P as a twisting map")?;
    let mu_p = lib(twisted_tensor_product(&p))?.mu().clone();
    let target = lib(lr_twisted_tensor_product(&data))?;
    let q = data.q();
    let n = q.rows();
    let mut pairs = 0;
    for i in 0..n {
        for j in 0..n {
            let lhs = lib(q.apply(&mu_p.column(i * n + j)))?;
            let rhs = lib(target.mu().apply(&kron_vec(&q.column(i), &q.column(j))))?;
            ensure(lhs == rhs, format!("Q is not multiplicative at ({i}, {j})"))?;
            pairs += 1;
        }
    }
    let alpha = target.alpha();
    ensure(lib(q.compose(alpha))? == lib(alpha.compose(q))?, "Q does not commute with the structure maps")?;
    Ok(format!("P twisting map; Q multiplicative on {pairs} basis pairs"))
}

// 4 -----------------------------------------------------------------------

fn closed_form_inverse() -> Outcome {
    let h = twisted_h4();
    let d = lib(dual_algebra(h.clone(), 0, 0))?;
    let x = d.bimodule_algebra();
    let q = lib(lr_smash_data(x))?.q().clone();
    let closed = lib(q_inverse_closed_form(x, &h))?;
    let inverse = lib(invert_linear_map(&q))?;
    ensure(closed == inverse, "closed form differs from the matrix inverse")?;
    ensure(lib(closed.compose(&q))?.is_identity(), "closed form is not a left inverse")?;
    let (_, rep) = lib(invert_q_report(x, &h))?;
    passing(&rep, "inverse report")?;
    Ok(format!("closed form equals the inverse on the {}-dim carrier", q.rows()))
}

// 5 -----------------------------------------------------------------------

fn two_sided() -> Outcome {
    let h = twisted_h4();
    let d = lib(dual_algebra(h, 0, 0))?;
    let x = d.bimodule_algebra();
    let (a, c) = (x.left_module_algebra(), x.right_module_algebra());
    let b = lib(two_sided_report(&a, &c))?;
    passing(&b.report, "bracketings")?;
    ensure(b.left.mu() == b.right.mu() && b.left.alpha() == b.right.alpha(), "bracketings differ")?;
    passing(&check_hom_algebra(&b.left), "A#H#C")?;
    let [r1, r2, r3] = lib(two_sided_twisting(&a, &c))?;
    let g = lib(regroup_report(&r1, &r2, &r3))?;
    passing(&g.report, "regrouping")?;
    passing(&check_lr_data(&g.data), "L-R data on (A⊗C, H)")?;
    // The regrouping is a permutation of basis vectors; check it on every
    // basis pair without forming its tensor square.
    let lr = lib(lr_twisted_tensor_product(&g.data))?;
    let n = b.left.dim();
    let image: Vec<usize> = (0..n)
        .map(|i| g.iso.column_nonzeros(i).first().map(|(r, _)| *r).ok_or("regrouping has a zero column"))
        .collect::<Result<_, _>>()?;
    for i in 0..n {
        for j in 0..n {
            let lhs = lib(g.iso.apply(&b.left.mu().column(i * n + j)))?;
            ensure(lhs == lr.mu().column(image[i] * n + image[j]), format!("regrouping not multiplicative at ({i}, {j})"))?;
        }
    }
    Ok(format!("both bracketings agree on the {n}-dim product; regrouping is an algebra isomorphism"))
}

// 6 -----------------------------------------------------------------------

fn double_suite() -> Outcome {
    single_threaded(|| {
        let d = lib(drinfeld_double(twisted_h4()))?;
        ensure(d.dim() == 16, format!("dimension {}", d.dim()))?;
        let hopf = lib(check_hom_hopf(d.hopf()))?;
        passing(&hopf, "Hom-Hopf suite of D(H)")?;
        for id in ["ant-left", "ant-right"] {
            ensure(hopf.entries.iter().any(|e| e.id.rsplit('.').next() == Some(id) && e.passed()), format!("{id} missing"))?;
        }
        let assoc = hopf.entries.iter().find(|e| e.id.rsplit('.').next() == Some("assoc")).ok_or("no assoc entry")?;
        ensure(assoc.tuples == 4096, format!("assoc swept {} triples", assoc.tuples))?;
        let qt = lib(check_quasitriangular(d.hopf().bialgebra(), d.r_matrix()))?;
        passing(&qt, "quasitriangular suite")?;
        for id in ["homQT1", "homQT2", "homQT3", "alpha-invariance"] {
            ensure(qt.holds(id), format!("{id} missing"))?;
        }
        passing(&lib(double_report(&d))?, "double report")?;
        Ok("D(H) of dim 16: both antipode equations, homQT1-3, R invariant; 4096 associativity triples".into())
    })
}

// 7 -----------------------------------------------------------------------

/// `D(k[Z_n])` from the group law alone, basis `eᵃ⋈g` at `a·n + g`.
struct ClassicalDouble {
    mu: LinMap,
    delta: LinMap,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: LinMap,
    r: Tensor,
}

fn classical_double(f: Field, n: usize) -> ClassicalDouble {
    let mul = |a: usize, b: usize| (a + b) % n;
    let inv = |a: usize| (n - a) % n;
    let conj = |g: usize, b: usize| mul(mul(g, b), inv(g));
    let idx = |a: usize, g: usize| a * n + g;
    let big = n * n;
    let one = |b: bool| if b { f.one() } else { f.zero() };
    // (eᵃ⋈g)(eᵇ⋈g') = δ_{a, gbg⁻¹} eᵃ⋈gg'
    let mu = LinMap::from_fn(f, big, big * big, |out, col| {
        let (x, y) = (col / big, col % big);
        let (a, g, b, g2) = (x / n, x % n, y / n, y % n);
        one(a == conj(g, b) && out == idx(a, mul(g, g2)))
    });
    // Δ(eᵃ⋈g) = Σ_{uv=a} (eᵛ⋈g)⊗(eᵘ⋈g)
    let delta = LinMap::from_fn(f, big * big, big, |row, col| {
        let (a, g) = (col / n, col % n);
        let (x, y) = (row / big, row % big);
        let (v, g1, u, g2) = (x / n, x % n, y / n, y % n);
        one(g1 == g && g2 == g && mul(u, v) == a)
    });
    let unit = (0..big).map(|k| one(k % n == 0)).collect();
    let counit = (0..big).map(|k| one(k / n == 0)).collect();
    // S(eᵃ⋈g) = e^{g⁻¹a⁻¹g}⋈g⁻¹
    let antipode = LinMap::from_fn(f, big, big, |row, col| {
        let (a, g) = (col / n, col % n);
        one(row == idx(conj(inv(g), inv(a)), inv(g)))
    });
    // R = Σₓ (ε⋈x)⊗(eˣ⋈1)
    let mut r = Tensor::zero(f, &[big, big]);
    for x in 0..n {
        for e in 0..n {
            r = r.add(&Tensor::basis(f, &[big, big], &[idx(e, x), idx(x, 0)]));
        }
    }
    ClassicalDouble { mu, delta, unit, counit, antipode, r }
}

fn classical_sanity() -> Outcome {
    let f = Field::Rational;
    for n in [2, 3] {
        let d = lib(drinfeld_double(Arc::new(group_algebra(f, n))))?;
        let c = classical_double(f, n);
        let hd = d.hopf();
        ensure(hd.mu() == &c.mu, format!("Z{n}: product differs"))?;
        ensure(hd.delta() == &c.delta, format!("Z{n}: coproduct differs"))?;
        ensure(hd.alpha().is_identity(), format!("Z{n}: structure map is not the identity"))?;
        ensure(hd.unit() == c.unit.as_slice(), format!("Z{n}: unit differs"))?;
        ensure(hd.counit() == c.counit.as_slice(), format!("Z{n}: counit differs"))?;
        ensure(hd.antipode() == &c.antipode, format!("Z{n}: antipode differs"))?;
        ensure(d.r_matrix() == &c.r, format!("Z{n}: R-matrix differs"))?;
    }
    Ok("D(k[Z2]) and D(k[Z3]) equal the brute-force classical doubles in every structure constant".into())
}

// 8 -----------------------------------------------------------------------

fn category_iso() -> Outcome {
    let d = lib(drinfeld_double(twisted_h4()))?;
    let regular = LeftModule::regular(Arc::new(d.hopf().algebra().clone()));
    let y = lib(functor_g(&regular, &d))?;
    passing(&lib(check_yetter_drinfeld(&y))?, "G(D(H))")?;
    let back = lib(functor_f(&y, &d))?;
    ensure(back == regular, "F∘G is not the identity on the regular module")?;
    ensure(lib(functor_g(&back, &d))? == y, "G∘F is not the identity on G's output")?;
    Ok(format!("F∘G and G∘F are identities on the {}-dim regular module", y.dim()))
}

// 9 -----------------------------------------------------------------------

/// An order-three matrix over Q of size `d` and a matrix conjugating it to
/// its square.
fn z3_rep(f: Field, d: usize, trivial: bool) -> (LinMap, LinMap) {
    match (d, trivial) {
        (_, true) => (LinMap::identity(f, d), LinMap::identity(f, d)),
        (1, false) => (LinMap::identity(f, 1), LinMap::identity(f, 1)),
        (2, false) => (
            LinMap::from_i64_rows(f, &[&[0, -1], &[1, -1]]),
            LinMap::from_i64_rows(f, &[&[0, 1], &[1, 0]]),
        ),
        _ => (LinMap::permutation(f, &[1, 2, 0]), LinMap::permutation(f, &[0, 2, 1])),
    }
}

/// Both actions of `k[Z3]` through powers of one representation `rho`.
fn z3_bimodule(f: Field, rho: &LinMap, left_power: usize, right_power: usize) -> Result<Bimodule, String> {
    let a = Arc::new(group_algebra(f, 3).algebra().clone());
    let d = rho.rows();
    let pow = |k: usize| rho.power(k as i32).expect("power");
    let (l, r): (Vec<LinMap>, Vec<LinMap>) = (0..3).map(|g| (pow(g * left_power), pow(g * right_power))).unzip();
    let left = LinMap::from_fn(f, d, 3 * d, |out, col| l[col / d].get(out, col % d).clone());
    let right = LinMap::from_fn(f, d, d * 3, |out, col| r[col % 3].get(out, col / 3).clone());
    lib(Bimodule::from_actions(a, LinMap::identity(f, d), left, right))
}

fn random_invertible(f: Field, d: usize, g: &mut Lcg) -> (LinMap, LinMap) {
    loop {
        let p = support::int_matrix(f, d, d, g, -2, 2);
        if let Ok(inv) = invert_linear_map(&p) {
            return (p, inv);
        }
    }
}

fn conjugate(m: &LinMap, p: &LinMap, p_inv: &LinMap) -> LinMap {
    p.compose(m).and_then(|x| x.compose(p_inv)).expect("shapes")
}

/// A Hom-bimodule over `k[Z3]_{α_A}` from a classical one, in a random basis.
fn valid_bimodule(g: &mut Lcg) -> Result<Bimodule, String> {
    let f = Field::Rational;
    let d = 1 + g.below(3) as usize;
    let nontrivial_alpha = g.below(2) == 1;
    let (rho, tau) = z3_rep(f, d, g.below(4) == 0);
    let (lp, rp) = (g.below(3) as usize, g.below(3) as usize);
    let (p, p_inv) = random_invertible(f, d, g);
    let rho = conjugate(&rho, &p, &p_inv);
    let b = z3_bimodule(f, &rho, lp, rp)?;
    // α_M = τ'(λ + μρ), with τ' = τ when α_A swaps g and g², else id.
    let (lam, mu) = loop {
        let (x, y) = (g.int(-2, 2), g.int(-2, 2));
        let cand = LinMap::identity(f, d).scale(&f.from_i64(x)).add(&rho.scale(&f.from_i64(y))).expect("shape");
        if invert_linear_map(&cand).is_ok() {
            break (x, y);
        }
    };
    let poly = LinMap::identity(f, d).scale(&f.from_i64(lam)).add(&rho.scale(&f.from_i64(mu))).expect("shape");
    let (alpha_a, alpha_m) = if nontrivial_alpha {
        (LinMap::permutation(f, &[0, 2, 1]), conjugate(&tau, &p, &p_inv).compose(&poly).expect("shape"))
    } else {
        (LinMap::identity(f, 3), poly)
    };
    lib(twist_bimodule(&b, &alpha_a, &alpha_m))
}

fn perturbed(b: &Bimodule, g: &mut Lcg) -> Result<Bimodule, String> {
    let (mut left, mut right) = (b.left().action().clone(), b.right().action().clone());
    let delta = if g.below(2) == 0 { 1 } else { -1 };
    match g.below(3) {
        0 => left = bump(&left, g.below(left.rows() as u64) as usize, g.below(left.cols() as u64) as usize, delta),
        1 => right = bump(&right, g.below(right.rows() as u64) as usize, g.below(right.cols() as u64) as usize, delta),
        _ => {
            let a = b.alpha();
            let alpha = bump(a, g.below(a.rows() as u64) as usize, g.below(a.cols() as u64) as usize, delta);
            return lib(Bimodule::from_actions(Arc::new(b.over().clone()), alpha, left, right));
        }
    }
    lib(Bimodule::from_actions(Arc::new(b.over().clone()), b.alpha().clone(), left, right))
}

fn fully_random(g: &mut Lcg) -> Result<Bimodule, String> {
    let f = Field::Rational;
    let d = 1 + g.below(3) as usize;
    let a = Arc::new(group_algebra(f, 3).algebra().clone());
    let left = support::int_matrix(f, d, 3 * d, g, -1, 1);
    let right = support::int_matrix(f, d, 3 * d, g, -1, 1);
    let (alpha, _) = random_invertible(f, d, g);
    lib(Bimodule::from_actions(a, alpha, left, right))
}

fn split_null_iff() -> Outcome {
    let mut g = Lcg::new(0x5eed_0009);
    let (mut yes, mut no) = (0, 0);
    for k in 0..40 {
        let b = match k % 4 {
            0 | 1 => valid_bimodule(&mut g)?,
            2 => {
                let v = valid_bimodule(&mut g)?;
                perturbed(&v, &mut g)?
            }
            _ => fully_random(&mut g)?,
        };
        passing(&check_hom_algebra(b.over()), "base algebra")?;
        let bimodule = matches!(check_bimodule(&b), Ok(r) if r.passed());
        let algebra = check_hom_algebra(&lib(split_null_extension(&b))?).passed();
        ensure(bimodule == algebra, format!("sample {k}: bimodule {bimodule}, split null extension {algebra}"))?;
        if bimodule {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure(yes > 0 && no > 0, format!("degenerate sample: {yes} bimodules, {no} non-bimodules"))?;
    Ok(format!("{} samples on carriers of dim ≤ 3: {yes} bimodules, {no} not; iff holds on all", yes + no))
}

// 10 ----------------------------------------------------------------------

fn confirm(id: &str, w: &Witness, (lhs, rhs): Sides) -> Result<(), String> {
    ensure(lhs != rhs, format!("{id}: re-evaluated sides agree at {:?}", w.tuple))?;
    ensure(lhs == w.lhs.to_dense() && rhs == w.rhs.to_dense(), format!("{id}: reported sides differ from re-evaluation"))
}

/// First single-constant mutation, in the given order, that makes `id` fail.
fn first_failure<T>(
    candidates: impl Iterator<Item = T>,
    check: impl Fn(&T) -> Option<AxiomReport>,
    id: &str,
) -> Option<(T, Witness)> {
    candidates.filter_map(|c| {
        let rep = check(&c)?;
        let e = rep.get(id)?;
        if e.passed() {
            return None;
        }
        let w = e.witness.clone()?;
        Some((c, w))
    })
    .next()
}

/// Every entry of `m` bumped by one, row-major.
fn bumps(m: &LinMap) -> impl Iterator<Item = LinMap> + '_ {
    (0..m.rows()).flat_map(move |r| (0..m.cols()).map(move |c| bump(m, r, c, 1)))
}

fn lr_mutations(data: &LRData) -> Result<usize, String> {
    let (a, b) = (data.a(), data.b());
    let (na, nb) = (a.dim(), b.dim());
    let ids = ["lrhom1", "lrhom2", "lrhom3", "lrhom4", "lrhom5", "lrhom6", "lrhom7", "lrhom8"];
    for id in ids {
        let via_r = bumps(data.r()).map(|r| (r, data.q().clone()));
        let via_q = bumps(data.q()).map(|q| (data.r().clone(), q));
        let (rq, w) = first_failure(via_r.chain(via_q), |(r, q)| {
            LRData::new(a.clone(), b.clone(), r.clone(), q.clone()).ok().map(|d| check_lr_data(&d))
        }, id)
        .ok_or(format!("{id}: no single-constant mutation of R or Q breaks it"))?;
        let p = Pair {
            field: a.field(),
            na,
            nb,
            mu_a: a.mu(),
            mu_b: b.mu(),
            alpha_a: a.alpha(),
            alpha_b: b.alpha(),
            r: &rq.0,
            q: Some(&rq.1),
        };
        let sides = match id {
            "lrhom1" => p.sweed0(&w.tuple),
            "lrhom3" => p.sweed1(&w.tuple),
            "lrhom4" => p.sweed2(&w.tuple),
            "lrhom2" => p.lr2(&w.tuple),
            "lrhom5" => p.lr5(&w.tuple),
            "lrhom6" => p.lr6(&w.tuple),
            "lrhom7" => p.lr7(&w.tuple),
            _ => p.lr8(&w.tuple),
        };
        confirm(id, &w, sides)?;
    }
    Ok(ids.len())
}

fn sweed_mutations(t: &TwistingMap) -> Result<usize, String> {
    let (a, b) = (t.a(), t.b());
    for id in ["homsweed0", "homsweed1", "homsweed2"] {
        let (r, w) = first_failure(bumps(t.map()), |r| {
            TwistingMap::new(a.clone(), b.clone(), r.clone(), false).ok().map(|m| check_twisting_map(&m))
        }, id)
        .ok_or(format!("{id}: no single-constant mutation breaks it"))?;
        let p = Pair {
            field: a.field(),
            na: a.dim(),
            nb: b.dim(),
            mu_a: a.mu(),
            mu_b: b.mu(),
            alpha_a: a.alpha(),
            alpha_b: b.alpha(),
            r: &r,
            q: None,
        };
        let sides = match id {
            "homsweed0" => p.sweed0(&w.tuple),
            "homsweed1" => p.sweed1(&w.tuple),
            _ => p.sweed2(&w.tuple),
        };
        confirm(id, &w, sides)?;
    }
    Ok(3)
}

fn qt_mutations(d: &DrinfeldDouble) -> Result<usize, String> {
    let h = d.hopf().bialgebra();
    let n = h.dim();
    let dense = d.r_matrix().to_dense();
    let f = h.field();
    let mutated = (0..dense.len()).map(|k| {
        let mut v = dense.clone();
        v[k] = &v[k] + &f.one();
        v
    });
    for id in ["homQT1", "homQT2", "homQT3"] {
        let (r, w) = first_failure(mutated.clone(), |v| {
            let t = Tensor::from_dense(f, &[n, n], v).ok()?;
            check_quasitriangular(h, &t).ok()
        }, id)
        .ok_or(format!("{id}: no single-constant mutation of R breaks it"))?;
        let q = Qt { field: f, n, mu: h.mu(), delta: h.delta(), alpha: h.alpha(), r: &r };
        let sides = match id {
            "homQT1" => q.qt1(),
            "homQT2" => q.qt2(),
            _ => q.qt3(&w.tuple),
        };
        confirm(id, &w, sides)?;
    }
    Ok(3)
}

fn yd_mutations(y: &YDModule) -> Result<usize, String> {
    let h = y.hopf_arc().clone();
    let (act, rho) = (y.action(), y.coaction());
    let via_rho = bumps(rho).map(|r| (act.clone(), r));
    let via_act = bumps(act).map(|a| (a, rho.clone()));
    let ((a, r), w) = first_failure(via_rho.chain(via_act), |(a, r)| {
        let m = YDModule::new(h.clone(), y.alpha().clone(), a.clone(), r.clone()).ok()?;
        yd_report(&m).ok()
    }, "YDlr")
    .ok_or("YDlr: no single-constant mutation breaks it")?;
    let alpha2 = lib(h.alpha_pow(2))?;
    let o = Yd {
        field: h.field(),
        nh: h.dim(),
        nm: y.dim(),
        mu: h.mu(),
        delta: h.delta(),
        alpha: h.alpha(),
        alpha2: &alpha2,
        action: &a,
        coaction: &r,
    };
    confirm("YDlr", &w, o.ydlr(&w.tuple))?;
    Ok(1)
}

fn mutation_soundness() -> Outcome {
    let h = twisted_h4();
    let dual = lib(dual_algebra(h.clone(), 0, 0))?;
    let x = dual.bimodule_algebra();
    let data = lib(lr_smash_data(x))?;
    passing(&check_lr_data(&data), "unmutated L-R data")?;
    let mut count = lr_mutations(&data)?;
    let diag = lib(diagonal_report(x, &h))?;
    passing(&check_twisting_map(&diag.twisting), "unmutated twisting map")?;
    count += sweed_mutations(&diag.twisting.clone().with_unital(false))?;
    let d = lib(drinfeld_double(h.clone()))?;
    passing(&lib(check_quasitriangular(d.hopf().bialgebra(), d.r_matrix()))?, "unmutated R-matrix")?;
    count += qt_mutations(&d)?;
    let regular = LeftModule::regular(Arc::new(d.hopf().algebra().clone()));
    let y = lib(functor_g(&regular, &d))?;
    passing(&lib(yd_report(&y))?, "unmutated YD module")?;
    count += yd_mutations(&y)?;
    Ok(format!("{count} axioms: each broken by one constant, witnesses re-evaluated and unequal"))
}

// 11 ----------------------------------------------------------------------

fn run_cli(jobs: &str) -> Result<Vec<u8>, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = ["homhopf", "--jobs", jobs, "--format", "json", "double", "h4-sweedler-twisted", "--verify"];
    let code = homhopf::io::cli::run(args, &mut out, &mut err);
    ensure(code == 0, format!("jobs {jobs}: exit {code}: {}", String::from_utf8_lossy(&err)))?;
    Ok(out)
}

fn determinism() -> Outcome {
    let reference = run_cli("1")?;
    ensure(!reference.is_empty(), "empty report")?;
    for jobs in ["8", "1", "8"] {
        ensure(run_cli(jobs)? == reference, format!("jobs {jobs} output differs"))?;
    }
    Ok(format!("4 runs at jobs 1/8 byte-identical ({} bytes)", reference.len()))
}

// -------------------------------------------------------------------------

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("hopf-suite", 5, hopf_suite),
        ("twisting-principles", 5, twisting_principles),
        ("q-factorization", 5, factorization),
        ("closed-form-q-inverse", 1, closed_form_inverse),
        ("two-sided-smash", 10, two_sided),
        ("drinfeld-double", 30, double_suite),
        ("classical-double", 1, classical_sanity),
        ("yd-category-iso", 10, category_iso),
        ("split-null-iff", 10, split_null_iff),
        ("mutation-soundness", 60, mutation_soundness),
        ("determinism", 120, determinism),
    ];
    println!("acceptance: exact comparisons (tolerance 0)");
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let dt = t.elapsed();
        let in_time = dt <= Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2} {name:<22} {:>8.2?} / {limit:>3} s  {detail}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            dt
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
