//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ambitoric::algebra::{scalar, Polynomial, RationalFunction, Var};
use ambitoric::binary_forms::{BinaryForm, QuadraticForm};
use ambitoric::builder::*;
use ambitoric::classifier::*;
use ambitoric::sampler::{csc_choices, Sampler};
use ambitoric::tensor::{curvature, tracefree_ricci, weyl_split};
use num_traits::Zero;

/// Wall-clock limit for the Kähler suite of a single spec.
const KAHLER_SECONDS_PER_SPEC: f64 = 10.0;
const SPECS_PER_TYPE: usize = 20;
const BICONDITIONAL_EACH_WAY: usize = 10;
const BACH_EACH_WAY: usize = 5;
const CSC_EACH_WAY: usize = 5;
const QIP_PAIRS: usize = 100;
const SQUARE_PAIRS: usize = 20;
const KILLING_FG_PER_TYPE: usize = 5;
const KILLING_P_PER_TYPE: usize = 10;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn x() -> RationalFunction {
    RationalFunction::var(Var(0))
}

fn y() -> RationalFunction {
    RationalFunction::var(Var(1))
}

fn random_specs(seed: u64) -> Vec<AmbitoricSpec> {
    let mut s = Sampler::new(seed);
    FormType::NAMED
        .iter()
        .flat_map(|&t| (0..SPECS_PER_TYPE).map(move |i| (t, i)))
        .map(|(t, _)| s.random_spec(t))
        .collect()
}

fn kahler_suite_criterion() -> Outcome {
    let mut worst = Duration::ZERO;
    let specs = random_specs(101);
    for spec in &specs {
        let t = Instant::now();
        let m = build(spec).map_err(|e| e.to_string())?;
        for plus in [true, false] {
            for (name, r) in kahler_suite(m.metric(plus), m.complex_structure(plus), m.kahler_form(plus)) {
                ensure(r.is_zero(), || format!("{name} nonzero for {spec:?} (plus = {plus})"))?;
            }
        }
        worst = worst.max(t.elapsed());
    }
    ensure(worst.as_secs_f64() <= KAHLER_SECONDS_PER_SPEC, || format!("slowest spec took {worst:?}"))?;
    Ok(format!("{} specs, slowest {:.3} s", specs.len(), worst.as_secs_f64()))
}

fn scalar_curvature_criterion() -> Outcome {
    let specs = random_specs(101);
    let k = RationalFunction::from(SCALAR_CALIBRATION);
    for spec in &specs {
        let m = build(spec).map_err(|e| e.to_string())?;
        let (cp, cm) = scalar_curvature_closed(spec).map_err(|e| e.to_string())?;
        let sp = curvature(&m.gplus).map_err(|e| e.to_string())?.scalar;
        let sm = curvature(&m.gminus).map_err(|e| e.to_string())?.scalar;
        ensure(sp == &k * &cp && sm == &k * &cm, || format!("closed form differs from curvature for {spec:?}"))?;
    }
    Ok(format!("{} specs, calibration constant {SCALAR_CALIBRATION}", specs.len()))
}

fn extremality_criterion() -> Outcome {
    let mut s = Sampler::new(202);
    let mut counts = [0usize; 2];
    for t in FormType::NAMED {
        for i in 0..2 * BICONDITIONAL_EACH_WAY {
            let satisfying = i % 2 == 0;
            let spec = if satisfying { s.extremal_spec(t) } else { s.non_extremal_spec(t) };
            let m = build(&spec).map_err(|e| e.to_string())?;
            // oracle: J grad s is Killing, for both Kähler metrics
            let (_, rp) = extremal_oracle(&m.gplus, &m.j_plus).map_err(|e| e.to_string())?;
            let (_, rm) = extremal_oracle(&m.gminus, &m.j_minus).map_err(|e| e.to_string())?;
            let table = extremal_table_conditions(&spec).map_err(|e| e.to_string())?.iter().all(Condition::holds);
            ensure(table == satisfying, || format!("{t}: generated satisfying = {satisfying}, table says {table}"))?;
            ensure(rp.is_zero() == table && rm.is_zero() == table, || {
                format!("{t}: table {table}, oracle {} / {} for {spec:?}", rp.is_zero(), rm.is_zero())
            })?;
            if satisfying {
                let (pi, p) = extremal_decomposition(&spec).ok_or("no decomposition on a satisfying instance")?;
                let qpi = spec.q.to_binary_form().mul(&pi.to_binary_form());
                ensure(pi.inner_product(&spec.q).is_zero(), || "<pi, q> != 0".into())?;
                let (a, b) = (qpi.add(&p), qpi.sub(&p));
                ensure((0..5).all(|i| a.coeff(i) == spec.a.coeff(i)), || format!("A != q pi + P for {spec:?}"))?;
                ensure((0..5).all(|i| b.coeff(i) == spec.b.coeff(i)), || format!("B != q pi - P for {spec:?}"))?;
            }
            counts[satisfying as usize] += 1;
        }
    }
    Ok(format!("{} satisfying, {} violating", counts[1], counts[0]))
}

fn bach_einstein_criterion() -> Outcome {
    let mut s = Sampler::new(303);
    let mut ratios = 0;
    let mut flat = 0;
    let mut not_flat = 0;
    for t in FormType::NAMED {
        for i in 0..2 * BACH_EACH_WAY {
            let want = i % 2 == 0;
            let spec = if want { s.bach_flat_spec(t) } else { s.non_bach_flat_spec(t) };
            let m = build(&spec).map_err(|e| e.to_string())?;
            let ext = extremal_check(&m).map_err(|e| e.to_string())?;
            ensure(ext.holds, || format!("{t}: Bach-flat candidate not extremal"))?;
            let relation = bach_table_relation(&spec).map_err(|e| e.to_string())?;
            let oracle = ambitoric::tensor::bach(&m.gplus).map_err(|e| e.to_string())?.is_zero();
            ensure(relation.holds() == want && oracle == want, || {
                format!("{t}: wanted {want}, table {} oracle {oracle} for {spec:?}", relation.holds())
            })?;
            if want {
                flat += 1;
                let (sp, sm) = scalar_curvature_closed(&spec).map_err(|e| e.to_string())?;
                if !sp.is_zero() && !sm.is_zero() {
                    let r = bach_flat_volume_ratio(&m).map_err(|e| e.to_string())?;
                    ensure(r.is_some(), || format!("{t}: s-^4 v+ / (-s+^4 v-) not constant"))?;
                    ratios += 1;
                }
            } else {
                not_flat += 1;
            }
        }
    }
    // the fixture hyperbolic A = B = z
    let spec = AmbitoricSpec::from_ints(FormType::Hyperbolic, [0, 0, 0, 1, 0], [0, 0, 0, 1, 0]);
    let m = build(&spec).map_err(|e| e.to_string())?;
    ensure(weyl_split(&m.gplus).map_err(|e| e.to_string())?.wplus.is_zero(), || "fixture W+ nonzero".into())?;
    let sm = curvature(&m.gminus).map_err(|e| e.to_string())?.scalar;
    ensure(!sm.is_zero(), || "fixture s- vanishes".into())?;
    let g = m.gminus.conformal(&sm.pow(2).inv().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let ric0 = tracefree_ricci(&g, &curvature(&g).map_err(|e| e.to_string())?);
    ensure(ric0.is_zero(), || "fixture Ric0(s-^-2 g-) nonzero".into())?;
    Ok(format!("{flat} Bach-flat, {not_flat} not, {ratios} volume identities, fixture Einstein"))
}

fn csc_criterion() -> Outcome {
    let mut s = Sampler::new(404);
    let mut n = 0;
    for t in FormType::NAMED {
        for (pi, p) in csc_choices(t).into_iter().enumerate() {
            for i in 0..2 * CSC_EACH_WAY {
                let want = i % 2 == 0;
                let spec = s.csc_spec(t, pi, want);
                let table = csc_table_conditions(&spec).map_err(|e| e.to_string())?.iter().all(Condition::holds);
                // oracle: scalar curvature of (q/p)^2 g+ computed from scratch
                let m = build(&spec).map_err(|e| e.to_string())?;
                let factor = (&spec.q_xy() / &p.polarize()).pow(2);
                let g = m.gplus.conformal(&factor).map_err(|e| e.to_string())?;
                let sg = curvature(&g).map_err(|e| e.to_string())?.scalar;
                ensure(table == want && sg.is_constant() == want, || {
                    format!("{t} p = {p}: wanted {want}, table {table}, ds = 0 {}", sg.is_constant())
                })?;
                if want {
                    let r = csc_em_check(&m, &p).map_err(|e| e.to_string())?;
                    ensure(r.holds && r.em_residual_zero && r.c.is_some(), || {
                        format!("{t} p = {p}: Einstein-Maxwell residual nonzero for {spec:?}")
                    })?;
                }
                n += 1;
            }
        }
    }
    // the Plebański–Demiański coefficients satisfy the conditions identically
    let (a, b) = pd_symbolic();
    let eps = Polynomial::var(Var(5));
    let e2 = &eps * &eps;
    let sum = |i: usize| &a[i] + &b[i];
    let diff = |i: usize| &a[i] - &b[i];
    let identities = [
        &sum(0) + &(&e2 * &sum(4)),
        &sum(1) - &(&eps * &sum(3)),
        sum(2),
        &diff(1) + &(&eps * &diff(3)),
    ];
    ensure(identities.iter().all(Polynomial::is_zero), || "PD family violates a CSC condition".into())?;
    Ok(format!("{n} instances, PD identities hold"))
}

fn lcg(state: &mut u64) -> i64 {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    ((*state >> 33) % 11) as i64 - 5
}

fn appendix_a_criterion() -> Outcome {
    let mut st = 7u64;
    for _ in 0..QIP_PAIRS {
        let p = QuadraticForm::from_ints(lcg(&mut st), lcg(&mut st), lcg(&mut st));
        let w = QuadraticForm::from_ints(lcg(&mut st), lcg(&mut st), lcg(&mut st));
        let ip = p.inner_product(&w);
        let lhs = p.poisson_bracket(&w).discriminant();
        ensure(lhs == &ip * &ip - scalar(4) * p.discriminant() * w.discriminant(), || format!("Q-ip fails for {p}, {w}"))?;
        // order 1: -2 {p, w}; order 2: -2 <p, w>
        let (pp, wp) = (p.to_binary_form().with_bound(2).unwrap(), w.to_binary_form().with_bound(2).unwrap());
        let t1 = BinaryForm::transvectant(&pp, &wp, 1).map_err(|e| e.to_string())?;
        let br = p.poisson_bracket(&w).to_binary_form().scale(&scalar(-2));
        ensure((0..3).all(|i| t1.coeff(i) == br.coeff(i)), || format!("order-1 constant fails for {p}, {w}"))?;
        let t2 = BinaryForm::transvectant(&pp, &wp, 2).map_err(|e| e.to_string())?;
        ensure(t2.coeff(0) == scalar(-2) * &ip, || format!("order-2 constant fails for {p}, {w}"))?;
    }
    for _ in 0..SQUARE_PAIRS {
        let (s0, s1) = (lcg(&mut st), lcg(&mut st));
        let s1 = if s0 == 0 && s1 == 0 { 1 } else { s1 };
        let c: Vec<i64> = (0..5).map(|_| lcg(&mut st)).collect();
        let z = x();
        let lin = &RationalFunction::from(s0) + &(&RationalFunction::from(s1) * &z);
        let p = &lin * &lin;
        let cz: RationalFunction = (0..5).map(|i| &RationalFunction::from(c[i]) * &z.pow(i as u32)).sum();
        let inner = &p * &(&cz / &(&p * &p)).derivative(Var(0));
        let rhs = &(&p * &p) * &inner.derivative(Var(0));
        let pf = BinaryForm::from_ints(2, &[s0 * s0, 2 * s0 * s1, s1 * s1]).unwrap();
        let lhs = BinaryForm::curvature_bracket(&pf, &BinaryForm::from_ints(4, &c).unwrap()).eval_in(Var(0));
        ensure(lhs == rhs, || format!("perfect-square identity fails for s = {s0} + {s1} z, C = {c:?}"))?;
    }
    Ok(format!("{QIP_PAIRS} Q-ip pairs, constants -2 and -2, {SQUARE_PAIRS} square brackets"))
}

fn killing_criterion() -> Outcome {
    let mut s = Sampler::new(505);
    let mut null_witness = false;
    for t in FormType::NAMED {
        let spec = s.random_spec(t);
        let m = build(&spec).map_err(|e| e.to_string())?;
        let (_, r) = killing_tensor_barycentric(&m).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("{t}: barycentric residual nonzero"))?;
        let mut done = 0;
        while done < KILLING_FG_PER_TYPE {
            let f = BinaryForm::from_ints(2, &s.small_poly()).unwrap();
            let g = BinaryForm::from_ints(2, &s.small_poly()).unwrap();
            if f.sub(&g).is_zero() {
                continue;
            }
            let (_, _, r) = killing_tensor_from_fg(&m, &f, &g).map_err(|e| e.to_string())?;
            ensure(r.is_zero(), || format!("{t}: F = {f}, G = {g} residual nonzero"))?;
            done += 1;
        }
        let mut ps: Vec<QuadraticForm> = (0..KILLING_P_PER_TYPE - 1).map(|_| s.orthogonal_quadratic(&spec.q)).collect();
        if t == FormType::Hyperbolic {
            ps.push(QuadraticForm::from_ints(1, 0, 0));
        } else {
            ps.push(s.orthogonal_quadratic(&spec.q));
        }
        for p in ps {
            let verdict = diagonal_ricci_killing_existence(&spec, &p).map_err(|e| e.to_string())?;
            let h = &(&(&x() - &y()) * &spec.q_xy()) / &p.polarize().pow(2);
            let hxy = h.derivative(Var(0)).derivative(Var(1));
            ensure(verdict == hxy.is_zero(), || format!("{t}: p = {p}, verdict {verdict}, h_xy = 0 {}", hxy.is_zero()))?;
            null_witness |= t == FormType::Hyperbolic && verdict;
        }
    }
    ensure(null_witness, || "no Q(p) = 0 witness in the hyperbolic type".into())?;
    Ok(format!("{} F,G pairs, {} p per type, hyperbolic null witness", 3 * KILLING_FG_PER_TYPE, KILLING_P_PER_TYPE))
}

fn calabi_criterion() -> Outcome {
    let k = scalar(2);
    let cases: [[i64; 5]; 5] = [[1, 0, 2, 0, 0], [0, 0, 2, 1, 0], [0, 1, 2, 0, 0], [1, 1, 2, 1, 3], [1, 2, 5, -1, 1]];
    for v in cases {
        let r = calabi_classify(&BinaryForm::quartic_ints(v), &k).map_err(|e| e.to_string())?;
        ensure(r.flags == r.oracle, || format!("V = {v:?}: flags {:?}, oracle {:?}", r.flags, r.oracle))?;
        if let Some(res) = r.einstein_residual {
            ensure(res.is_zero(), || format!("V = {v:?}: s^-2 g not Einstein"))?;
        }
    }
    Ok(format!("{} profiles, k = {k}", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 Kahler suite", kahler_suite_criterion),
        ("2 scalar curvature closed form", scalar_curvature_criterion),
        ("3 extremality biconditional", extremality_criterion),
        ("4 Bach-flat and Einstein", bach_einstein_criterion),
        ("5 CSC and Einstein-Maxwell", csc_criterion),
        ("6 binary form identities", appendix_a_criterion),
        ("7 Killing tensors", killing_criterion),
        ("8 Calabi family", calabi_criterion),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {secs:.1} s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why}; {secs:.1} s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
