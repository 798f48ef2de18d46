//! The acceptance experiments, one named suite per criterion.

use std::thread;

use jgl_core::catalog::{self, rectangular_pair, standard_pairs};
use jgl_core::flags::{
    bijection_check, flag_transversal, flags_from_grading, grading_from_transversal,
    lie_flag_theorem_check, LieFiltration, ModuleGrading,
};
use jgl_core::geom::{
    verify_affine_independence, verify_affine_independence_sampled, ChartStyle, FlagGeometry,
    GrassGeometry, Orthopolarity, PairGeometry, ProductLineGeometry,
};
use jgl_core::jordan::{scalar_pair, Convention, JordanPair, JordanTripleSystem, Sign};
use jgl_core::kernel::sample::Sampler;
use jgl_core::kernel::subspace::{combinations, gaussian_binomial};
use jgl_core::kernel::{vector, Method};
use jgl_core::liealg::{elementary_orbit, sl2_match, tkk};
use jgl_core::report::{Check, Report};
use jgl_core::states::{
    classify_intrinsic, flags_of_type, pure_states, standard_flag, states_equivalence,
};
use jgl_core::{Error, Result, Ring, Scalar, Subspace};
use serde_json::json;

use crate::output::{Format, Output};

pub const DEFAULT_SEED: u64 = 20;

#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub seed: u64,
    pub limit: u64,
}

pub struct Suite {
    pub id: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    run: fn(&Ctx) -> Result<Output>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        id: "axioms",
        criterion: 1,
        title: "LJP1/LJP2 for the catalog over Q and F5",
        run: axioms,
    },
    Suite {
        id: "fundamental",
        criterion: 2,
        title: "fundamental formula, exhaustive and polarized",
        run: fundamental,
    },
    Suite {
        id: "meyberg",
        criterion: 3,
        title: "homotopes are Jordan algebras",
        run: meyberg,
    },
    Suite {
        id: "invertibility",
        criterion: 4,
        title: "inverses, homotope units and round trips",
        run: invertibility,
    },
    Suite {
        id: "jordan-lie",
        criterion: 5,
        title: "Jordan triple systems give Lie triple systems",
        run: jordan_lie,
    },
    Suite {
        id: "tkk",
        criterion: 6,
        title: "pair recovered from its TKK algebra",
        run: tkk_suite,
    },
    Suite {
        id: "geometry",
        criterion: 7,
        title: "chart law, p_r and affine independence on Grassmannians",
        run: geometry,
    },
    Suite {
        id: "symmetric-space",
        criterion: 8,
        title: "M1-M3 for the dot-form orthopolarity",
        run: symmetric_space,
    },
    Suite {
        id: "flags",
        criterion: 9,
        title: "module flags and Lie filtrations",
        run: flags,
    },
    Suite {
        id: "exp-bijection",
        criterion: 10,
        title: "exp(x)e parametrizes the transversal filtrations",
        run: exp_bijection,
    },
    Suite {
        id: "orbit",
        criterion: 11,
        title: "elementary orbits of the base filtration",
        run: orbit,
    },
    Suite {
        id: "states",
        criterion: 12,
        title: "intrinsic subspaces, inner ideals and flags",
        run: states,
    },
    Suite {
        id: "affine-failure",
        criterion: 13,
        title: "origin dependence for length-2 flag geometries",
        run: affine_failure,
    },
    Suite {
        id: "determinism",
        criterion: 14,
        title: "byte-identical reports over 3 runs",
        run: determinism,
    },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn suite_command(id: &str, seed: u64) -> Vec<String> {
    ["suite", "--name", id, "--seed", &seed.to_string()]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

impl Suite {
    /// Runs the suite; an error becomes a failing check.
    pub fn run(&self, ctx: &Ctx) -> Output {
        let mut out = match (self.run)(ctx) {
            Ok(o) => o,
            Err(e) => Output::new(Report {
                checks: vec![Check::fail("SuiteError", e.to_string())],
            }),
        };
        out.command = suite_command(self.id, ctx.seed);
        out.data.insert("criterion".into(), json!(self.criterion));
        out.data.insert("suite".into(), json!(self.id));
        out
    }
}

/// Runs `suites` on up to `jobs` threads; results come back in input order.
pub fn run_many(suites: &[&'static Suite], ctx: &Ctx, jobs: usize) -> Vec<Output> {
    let jobs = jobs.max(1);
    let mut results: Vec<Option<Output>> = vec![None; suites.len()];
    for (chunk_idx, chunk) in suites.chunks(jobs).enumerate() {
        let outs: Vec<Output> = thread::scope(|s| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|suite| s.spawn(move || suite.run(ctx)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite thread panicked"))
                .collect()
        });
        for (i, o) in outs.into_iter().enumerate() {
            results[chunk_idx * jobs + i] = Some(o);
        }
    }
    results
        .into_iter()
        .map(|o| o.expect("every suite ran"))
        .collect()
}

fn f5() -> Ring {
    Ring::Prime(5)
}

fn all_elements(ring: Ring, n: usize) -> Vec<Vec<Scalar>> {
    let size = vector::field_power(ring, n) as u64;
    (0..size).map(|c| vector::decode(ring, n, c)).collect()
}

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `n` items spread evenly over `items`.
fn strided<T: Clone>(items: &[T], n: usize) -> Vec<T> {
    let step = items.len().div_ceil(n.max(1)).max(1);
    items.iter().step_by(step).take(n).cloned().collect()
}

fn swapped(p: &JordanPair) -> JordanPair {
    JordanPair::new(p.t(Sign::Minus).clone(), p.t(Sign::Plus).clone()).expect("opposite pair")
}

// ------------------------------------------------------------ criteria

fn axioms(_: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    for ring in [Ring::Rational, f5()] {
        for (name, p) in standard_pairs(ring) {
            r.extend_prefixed(&format!("{ring}/{name}"), p.verify(Method::Basis)?);
        }
    }
    Ok(Output::new(r))
}

fn fundamental(ctx: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    let mut compared = 0usize;
    for (name, p) in standard_pairs(f5()) {
        let (a, b) = p.dims();
        if a + b > 6 {
            continue;
        }
        for s in Sign::both() {
            let ex = p.check_fundamental(s, Method::Exhaustive { limit: ctx.limit })?;
            let ex_passed = ex.passed;
            r.extend_prefixed(&format!("{name}/exhaustive"), Report { checks: vec![ex] });
            match p.check_fundamental(s, Method::Polarized) {
                Ok(pol) => {
                    compared += 1;
                    let agree = pol.passed == ex_passed;
                    r.extend_prefixed(&format!("{name}/polarized"), Report { checks: vec![pol] });
                    r.push(Check::new(format!("{name}/MethodsAgree{s}"), agree));
                }
                Err(Error::Method(_)) | Err(Error::NotInvertible { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Output::new(r).ring(f5()).with("compared", json!(compared)))
}

fn meyberg(ctx: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    for (name, p) in standard_pairs(f5()) {
        let (np, nm) = p.dims();
        if np > 3 {
            continue;
        }
        let elements = all_elements(f5(), nm);
        let mut failure = None;
        for a in &elements {
            let rep = p
                .homotopy_algebra(a)?
                .verify(Method::Exhaustive { limit: ctx.limit })?;
            let first = rep.failures().next().map(|c| {
                format!(
                    "a={} {} {}",
                    show(a),
                    c.name,
                    c.witness.clone().unwrap_or_default()
                )
            });
            if first.is_some() {
                failure = first;
                break;
            }
        }
        let mut c = Check::new(format!("{name}/Homotopes"), failure.is_none())
            .note("elements", elements.len());
        if let Some(w) = failure {
            c = c.with_witness(w);
        }
        r.push(c);
    }
    Ok(Output::new(r).ring(f5()))
}

fn exact_roundtrip(r: &mut Report, label: &str, p: &JordanPair, a: &[Scalar]) -> Result<()> {
    let rep = p.roundtrip(a, Convention::Doubled)?;
    let rt = rep.get("RoundTrip").expect("round trip check");
    let exact = rt.get_note("exact_match") == Some(&true.into());
    r.extend_prefixed(label, rep.clone());
    r.push(Check::new(format!("{label}/ExactMatch"), exact).note("unit", show(a)));
    Ok(())
}

fn invertibility(_: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    let p = scalar_pair(ring, 2);
    let a = [ring.int(2)];
    let inv = p.invertibility(&a);
    let three = ring.int(3);
    let sharp_ok = inv.invertible && inv.sharp == Some(vec![three]) && a[0].inv() == Some(three);
    r.push(
        Check::new("scalar/SharpIsInverse", sharp_ok)
            .note("sharp", inv.sharp.as_deref().map(show).unwrap_or_default()),
    );
    let unit = p.homotopy_algebra(&a)?.unit;
    r.push(
        Check::new("scalar/HomotopeUnit", unit == Some(vec![three]))
            .note("unit", unit.as_deref().map(show).unwrap_or_default()),
    );

    let rect = rectangular_pair(1, 2, ring)?;
    let (np, nm) = rect.dims();
    let opposite = swapped(&rect);
    let minus = all_elements(ring, nm)
        .iter()
        .filter(|y| rect.invertibility(y).invertible)
        .count();
    let plus = all_elements(ring, np)
        .iter()
        .filter(|x| opposite.invertibility(x).invertible)
        .count();
    r.push(
        Check::new("rectangular(1,2)/NoInvertible", minus + plus == 0)
            .note("checked_minus", vector::field_power(ring, nm) as u64)
            .note("checked_plus", vector::field_power(ring, np) as u64)
            .note("invertible", minus + plus),
    );

    for q in [Ring::Rational, ring] {
        exact_roundtrip(
            &mut r,
            &format!("{q}/scalar"),
            &scalar_pair(q, 2),
            &[q.one()],
        )?;
        let herm = catalog::hermitian_pair(2, 1, q)?;
        exact_roundtrip(
            &mut r,
            &format!("{q}/hermitian(2)"),
            &herm,
            &[q.one(), q.zero(), q.one()],
        )?;
    }
    Ok(Output::new(r).ring(ring))
}

fn jordan_lie(_: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    for ring in [Ring::Rational, f5()] {
        for (name, p) in standard_pairs(ring) {
            let jts = p.polarized_jts();
            r.extend_prefixed(
                &format!("{ring}/{name}/polarized"),
                jts.to_lts().verify(Method::Basis)?,
            );
            if p.t(Sign::Plus) == p.t(Sign::Minus) {
                let own = JordanTripleSystem::new(p.t(Sign::Plus).clone())?;
                r.extend_prefixed(
                    &format!("{ring}/{name}/jts"),
                    own.to_lts().verify(Method::Basis)?,
                );
            }
        }
        let scalar = JordanTripleSystem::new(scalar_pair(ring, 2).t(Sign::Plus).clone())?;
        r.push(Check::new(
            format!("{ring}/scalar/ZeroLts"),
            scalar.to_lts().r.is_zero(),
        ));
        for m in 1..=3 {
            let lp = catalog::CatalogSpec::Loop { m }.build(ring)?;
            let jts = JordanTripleSystem::new(lp.t(Sign::Plus).clone())?;
            r.push(Check::new(
                format!("{ring}/loop({m})/ZeroLts"),
                jts.to_lts().r.is_zero(),
            ));
        }
    }
    Ok(Output::new(r))
}

fn tkk_suite(_: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    for ring in [Ring::Rational, f5()] {
        for (name, p) in standard_pairs(ring) {
            let g = tkk(&p);
            let back = g.pair_from_3graded()?;
            r.push(
                Check::new(format!("{ring}/{name}/PairRecovered"), back == p)
                    .note("tkk_dim", g.dim()),
            );
            r.extend_prefixed(&format!("{ring}/{name}"), g.verify_lie()?);
        }
    }
    let q = Ring::Rational;
    let g = tkk(&rectangular_pair(1, 1, q)?);
    r.push(Check::new("rectangular(1,1)/Dimension3", g.dim() == 3).note("dim", g.dim()));
    let m = sl2_match(&g);
    let mut c = Check::new("rectangular(1,1)/Sl2Bracket", m.is_some());
    if let Some((a, b, h)) = m {
        c = c
            .note("e", format!("{a}*x"))
            .note("f", format!("{b}*y"))
            .note("h", format!("{h}*h0"));
    }
    r.push(c);
    Ok(Output::new(r))
}

/// `P_r` computed from rescaled representatives agrees with the canonical one.
fn pr_independence(g: &GrassGeometry, seed: u64, trials: u64, limit: u64) -> Result<Check> {
    let points = g.points(limit)?;
    let duals = g.duals(limit)?;
    let mut failure = None;
    for t in 0..trials {
        let mut s = Sampler::new(seed.wrapping_add(t));
        let a = &duals[s.below(duals.len() as u64) as usize];
        let dom: Vec<_> = points.iter().filter(|x| g.transversal(x, a)).collect();
        let x = dom[s.below(dom.len() as u64) as usize];
        let y = dom[s.below(dom.len() as u64) as usize];
        let r = s.scalar(g.ring);
        let canonical = g.p_r(x, a, y, r)?;
        let f = x.rep().mul(&s.invertible(g.ring, g.a));
        let phi = s.invertible(g.ring, g.a).mul(&a.rep());
        let h = y.rep().mul(&s.invertible(g.ring, g.a));
        let other = g.make_point(&GrassGeometry::p_r_rep(&f, &phi, &h, r)?)?;
        if other != canonical && failure.is_none() {
            failure = Some(format!(
                "seed {} x={} alpha={} y={} r={r}",
                seed.wrapping_add(t),
                g.show_point(x),
                g.show_dual(a),
                g.show_point(y)
            ));
        }
    }
    let c = Check::new("PrRepresentativeIndependence", failure.is_none()).note("seeds", trials);
    Ok(match failure {
        Some(w) => c.with_witness(w),
        None => c,
    })
}

fn geometry(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    let g1 = GrassGeometry::new(ring, 2, 1)?;
    let g2 = GrassGeometry::new(ring, 4, 2)?;
    let all1 = g1.duals(ctx.limit)?;
    let pivots2 = g2.pivot_representatives(ctx.limit)?;
    r.extend_prefixed("gras1_f5_2", g1.chart_law(&all1, ctx.limit)?);
    r.extend_prefixed("gras2_f5_4", g2.chart_law(&pivots2, ctx.limit)?);
    r.extend_prefixed(
        "gras1_f5_2",
        Report {
            checks: vec![pr_independence(&g1, ctx.seed, 100, ctx.limit)?],
        },
    );
    r.extend_prefixed(
        "gras2_f5_4",
        Report {
            checks: vec![pr_independence(&g2, ctx.seed, 100, ctx.limit)?],
        },
    );
    r.extend_prefixed(
        "gras1_f5_2",
        verify_affine_independence(&g1, &all1, ctx.limit)?,
    );
    r.extend_prefixed(
        "gras2_f5_4",
        verify_affine_independence(&g2, &pivots2, ctx.limit)?,
    );
    Ok(Output::new(r).ring(ring))
}

fn symmetric_space(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    for (label, w, a) in [("gras1_f5_2", 2, 1), ("gras2_f5_4", 4, 2)] {
        let op = Orthopolarity::dot(GrassGeometry::new(ring, w, a)?)?;
        r.extend_prefixed(label, op.verify_symmetric_space(ctx.limit)?);
    }
    Ok(Output::new(r).ring(ring))
}

/// A random grading of `F^w` into at most `max_blocks` blocks.
pub fn random_grading(ring: Ring, w: usize, max_blocks: usize, seed: u64) -> ModuleGrading {
    let mut s = Sampler::new(seed);
    let k = 1 + s.below(max_blocks.min(w) as u64) as usize;
    let cuts = combinations(w - 1, k - 1);
    let cut = &cuts[s.below(cuts.len() as u64) as usize];
    let basis = s.invertible(ring, w).col_vecs();
    let mut bounds: Vec<usize> = cut.iter().map(|c| c + 1).collect();
    bounds.insert(0, 0);
    bounds.push(w);
    let blocks = bounds
        .windows(2)
        .map(|b| Subspace::span(ring, w, &basis[b[0]..b[1]]))
        .collect();
    ModuleGrading::new(blocks).expect("columns of an invertible matrix")
}

pub fn grading_roundtrip(
    ring: Ring,
    w: usize,
    max_blocks: usize,
    seed: u64,
    count: u64,
) -> Result<Check> {
    let mut failure = None;
    for t in 0..count {
        let g = random_grading(ring, w, max_blocks, seed.wrapping_add(t));
        let (fp, fm) = flags_from_grading(&g);
        let ok = flag_transversal(&fm, &fp)? && grading_from_transversal(&fm, &fp)? == g;
        if !ok && failure.is_none() {
            failure = Some(format!("seed {}", seed.wrapping_add(t)));
        }
    }
    let c = Check::new("GradingRoundTrip", failure.is_none())
        .note("gradings", count)
        .note("max_blocks", max_blocks);
    Ok(match failure {
        Some(w) => c.with_witness(w),
        None => c,
    })
}

fn theorem(g: &jgl_core::liealg::GradedLieAlgebra) -> Result<Report> {
    let f = LieFiltration::from_grading(g);
    let e = LieFiltration::opposite_from_grading(g);
    lie_flag_theorem_check(g, &e, &f)
}

fn flags(ctx: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    r.extend_prefixed(
        "f5_4",
        Report {
            checks: vec![grading_roundtrip(f5(), 4, 4, ctx.seed, 100)?],
        },
    );
    r.extend_prefixed("gl2_f5", theorem(&catalog::gl_3graded(1, 1, f5())?)?);
    r.extend_prefixed(
        "gl3_5grading_f7",
        theorem(&catalog::gl_graded(&[1, 0, -1], Ring::Prime(7)))?,
    );
    let rejected = theorem(&catalog::gl_graded(&[1, 0, -1], f5()));
    let c = Check::new(
        "gl3_5grading_f5/RingConstraint",
        matches!(rejected, Err(Error::NotInvertible { .. })),
    );
    r.push(match rejected {
        Err(e) => c.note("error", e.to_string()),
        Ok(_) => c.with_witness("F5 was accepted for a 5-grading"),
    });
    Ok(Output::new(r))
}

fn exp_bijection(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    for (label, g, want) in [
        ("sl2", catalog::sl2(ring), 5usize),
        ("gl3_blocks12", catalog::gl_3graded(1, 2, ring)?, 25),
    ] {
        let rep = bijection_check(&g, ctx.limit)?;
        let f1 = rep
            .get("Injective")
            .and_then(|c| c.get_note("f1_size"))
            .cloned();
        let top = rep
            .get("Surjective")
            .and_then(|c| c.get_note("ftop_size"))
            .cloned();
        let ok = f1 == Some(want.into()) && top == Some(want.into());
        r.extend_prefixed(label, rep);
        r.push(Check::new(format!("{label}/Counts"), ok).note("expected", want));
    }
    Ok(Output::new(r).ring(ring))
}

fn orbit(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    let mut sizes = serde_json::Map::new();
    for (label, g, n) in [
        ("sl2", catalog::sl2(ring), 2u32),
        ("gl3_blocks12", catalog::gl_3graded(1, 2, ring)?, 3),
    ] {
        let seed = LieFiltration::from_grading(&g).chain;
        let o = elementary_orbit(&g, &seed, usize::MAX, ctx.limit)?;
        let want = gaussian_binomial(n, 1, 5) as usize;
        r.push(
            Check::new(format!("{label}/OrbitSize"), o.closed && o.len() == want)
                .note("orbit_size", o.len())
                .note("expected", want)
                .note("closed", o.closed)
                .note("depth", o.depth),
        );
        sizes.insert(label.into(), json!(o.len()));
    }
    Ok(Output::new(r)
        .ring(ring)
        .with("orbit_size", serde_json::Value::Object(sizes)))
}

fn states(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    let g1 = GrassGeometry::new(ring, 3, 1)?;
    r.extend_prefixed("gras1_f5_3", classify_intrinsic(&g1, ctx.limit)?.report);
    let g2 = GrassGeometry::new(ring, 4, 2)?;
    r.extend_prefixed("gras2_f5_4", classify_intrinsic(&g2, ctx.limit)?.report);
    let (w, a) = (g2.w, g2.a);
    for d1 in 0..=a {
        for d2 in a..=w {
            let base = standard_flag(ring, w, d1, d2);
            let es = flags_of_type(ring, w, w - d2, w - d1);
            r.extend_prefixed(
                &format!("gras2_f5_4/f({d1},{d2})"),
                states_equivalence(&g2, &[base], &es)?,
            );
        }
    }
    for m in 2..=3 {
        r.extend_prefixed(
            &format!("lines_m{m}"),
            pure_states(&ProductLineGeometry::new(ring, m)?, ctx.limit)?.report,
        );
    }
    Ok(Output::new(r).ring(ring))
}

fn affine_failure(ctx: &Ctx) -> Result<Output> {
    let ring = f5();
    let mut r = Report::new();
    let (n_duals, n_origins) = (3, 20);
    let mut witness = None;
    let mut tuples = 0i64;
    for dims in [[1, 3], [1, 2], [2, 3]] {
        for (style, tag) in [(ChartStyle::Graph, "graph"), (ChartStyle::Exp, "exp")] {
            let g = FlagGeometry::new(ring, 4, &dims)?.with_style(style);
            let duals = strided(&g.duals(ctx.limit)?, n_duals);
            let rep = verify_affine_independence_sampled(&g, &duals, n_origins, ctx.limit)?;
            let c = rep.get("AffineIndependence").expect("affine check");
            if let Some(jgl_core::report::Note::Int(t)) = c.get_note("tuples_checked") {
                tuples += t;
            }
            if !c.passed && witness.is_none() {
                witness = c.witness.clone();
            }
            r.extend_prefixed(&format!("flags{:?}/{tag}", dims), rep);
        }
    }
    let found = witness.is_some();
    let c = Check::new("LengthTwoWitness", found).note("tuples_checked", tuples);
    r.push(match witness {
        Some(w) => c.with_witness(w),
        None => c.with_witness(format!(
            "no origin dependence among {tuples} tuples: every chart transition was affine for types (1,3), (1,2), (2,3)"
        )),
    });
    // Longer flags do show the dependence in exponential coordinates.
    let full = FlagGeometry::new(ring, 4, &[1, 2, 3])?.with_style(ChartStyle::Exp);
    let duals = strided(&full.duals(ctx.limit)?, 1);
    let rep = verify_affine_independence_sampled(&full, &duals, n_origins, ctx.limit)?;
    let c = rep.get("AffineIndependence").expect("affine check");
    let mut supp = Check::new("LengthThreeExpWitness", !c.passed);
    if let Some(w) = &c.witness {
        supp = supp.with_witness(w.clone());
    }
    r.push(supp);
    Ok(Output::new(r).ring(ring))
}

fn determinism(ctx: &Ctx) -> Result<Output> {
    let mut r = Report::new();
    for suite in SUITES.iter().filter(|s| s.id != "determinism") {
        let runs: Vec<String> = (0..3)
            .map(|_| suite.run(ctx).render(Format::Json, None))
            .collect();
        let same = runs.windows(2).all(|w| w[0] == w[1]);
        let c = Check::new(format!("{}/Identical", suite.id), same)
            .note("runs", 3usize)
            .note("bytes", runs[0].len());
        r.push(if same {
            c
        } else {
            c.with_witness("reports differ between runs")
        });
    }
    Ok(Output::new(r))
}
