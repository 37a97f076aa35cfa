//! Hypergraph-category and functor law checking.
//!
//! Axioms are symbolic terms ([`terms::catalogue`]) evaluated in any
//! [`HypergraphInstance`] at concrete object sizes. Functor checks sample
//! morphisms with a seeded generator, so reports are reproducible.

pub mod instances;
pub mod sample;
pub mod terms;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::cospan::Frobenius;
use crate::error::Result;
use terms::{catalogue, Axiom, Obj, Term};

/// A strict symmetric monoidal category whose objects are natural numbers,
/// with a Frobenius structure on every object.
pub trait HypergraphInstance {
    type Mor: Clone;

    fn name(&self) -> String;

    fn obj_tensor(&self, x: usize, y: usize) -> usize;
    fn unit_obj(&self) -> usize;

    fn dom(&self, f: &Self::Mor) -> usize;
    fn cod(&self, f: &Self::Mor) -> usize;

    fn identity(&self, x: usize) -> Self::Mor;
    fn generator(&self, x: usize, which: Frobenius) -> Self::Mor;
    fn braid(&self, x: usize, y: usize) -> Self::Mor;

    /// Diagrammatic composite: `f` then `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool>;

    /// A random morphism `x -> y` whose size is bounded by `budget`.
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Self::Mor;

    fn describe(&self, f: &Self::Mor) -> String;
}

fn obj_size<I: HypergraphInstance + ?Sized>(inst: &I, o: &Obj, x: usize, y: usize) -> usize {
    match o {
        Obj::X => x,
        Obj::Y => y,
        Obj::Unit => inst.unit_obj(),
        Obj::Tensor(a, b) => inst.obj_tensor(obj_size(inst, a, x, y), obj_size(inst, b, x, y)),
    }
}

/// Evaluates `t` with `X = x`, `Y = y`.
pub fn evaluate<I: HypergraphInstance + ?Sized>(
    inst: &I,
    t: &Term,
    x: usize,
    y: usize,
) -> Result<I::Mor> {
    match t {
        Term::Id(o) => Ok(inst.identity(obj_size(inst, o, x, y))),
        Term::Gen(k, o) => Ok(inst.generator(obj_size(inst, o, x, y), *k)),
        Term::Braid(a, b) => Ok(inst.braid(obj_size(inst, a, x, y), obj_size(inst, b, x, y))),
        Term::Compose(ts) => fold_terms(inst, ts, x, y, |f, g| inst.compose(f, g)),
        Term::Tensor(ts) => fold_terms(inst, ts, x, y, |f, g| inst.tensor(f, g)),
    }
}

fn fold_terms<I: HypergraphInstance + ?Sized>(
    inst: &I,
    ts: &[Term],
    x: usize,
    y: usize,
    op: impl Fn(&I::Mor, &I::Mor) -> Result<I::Mor>,
) -> Result<I::Mor> {
    let mut it = ts.iter();
    let first = it.next().expect("nonempty term list");
    let mut acc = evaluate(inst, first, x, y)?;
    for t in it {
        acc = op(&acc, &evaluate(inst, t, x, y)?)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub axiom: String,
    pub object: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status != Status::Pass)
    }

    pub fn status_of(&self, axiom: &str) -> Vec<Status> {
        self.results
            .iter()
            .filter(|r| r.axiom == axiom)
            .map(|r| r.status)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn check_axiom<I: HypergraphInstance + ?Sized>(
    inst: &I,
    ax: &Axiom,
    x: usize,
    y: usize,
) -> CheckResult {
    let object = if ax.is_binary() {
        format!("X={x},Y={y}")
    } else {
        format!("X={x}")
    };
    let outcome = evaluate(inst, &ax.lhs, x, y).and_then(|l| {
        let r = evaluate(inst, &ax.rhs, x, y)?;
        Ok((inst.equal(&l, &r)?, l, r))
    });
    let (status, counterexample) = match outcome {
        Ok((true, _, _)) => (Status::Pass, None),
        Ok((false, l, r)) => (
            Status::Fail,
            Some(format!(
                "{} = {}  but  {} = {}",
                ax.lhs,
                inst.describe(&l),
                ax.rhs,
                inst.describe(&r)
            )),
        ),
        Err(e) => (Status::Error, Some(e.to_string())),
    };
    CheckResult {
        axiom: ax.name.to_string(),
        object,
        status,
        counterexample,
    }
}

/// Every catalogue axiom at every object size `<= max_size` (pairs of sizes
/// for the coherence conditions).
pub fn check_frobenius<I: HypergraphInstance + ?Sized>(inst: &I, max_size: usize) -> Report {
    let mut results = Vec::new();
    for ax in catalogue() {
        if ax.is_binary() {
            for x in 0..=max_size {
                for y in 0..=max_size {
                    results.push(check_axiom(inst, &ax, x, y));
                }
            }
        } else {
            for x in 0..=max_size {
                results.push(check_axiom(inst, &ax, x, 0));
            }
        }
    }
    Report { results }
}

/// Sampling parameters for [`check_functor`].
#[derive(Debug, Clone, Copy)]
pub struct FunctorCheck {
    pub max_size: usize,
    pub budget: usize,
    pub cases: usize,
    pub seed: u64,
}

impl Default for FunctorCheck {
    fn default() -> Self {
        Self {
            max_size: 2,
            budget: 3,
            cases: 200,
            seed: 42,
        }
    }
}

/// Checks an identity-on-objects functor `src -> dst`: composition and
/// tensor on `cases` random samples each, identities, symmetries and the
/// Frobenius generators at every size `<= max_size`.
pub fn check_functor<S, D, F>(src: &S, dst: &D, functor: F, opts: FunctorCheck) -> Report
where
    S: HypergraphInstance + ?Sized,
    D: HypergraphInstance + ?Sized,
    F: Fn(&S::Mor) -> Result<D::Mor>,
{
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut results = Vec::new();
    let n = opts.max_size;

    let mut law = |name: &str, object: String, outcome: Result<Option<String>>| {
        let (status, counterexample) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(c)) => (Status::Fail, Some(c)),
            Err(e) => (Status::Error, Some(e.to_string())),
        };
        results.push(CheckResult {
            axiom: name.to_string(),
            object,
            status,
            counterexample,
        });
    };

    let compare = |a: &D::Mor, b: &D::Mor, what: &dyn Fn() -> String| -> Result<Option<String>> {
        Ok(if dst.equal(a, b)? {
            None
        } else {
            Some(format!(
                "{}: {} vs {}",
                what(),
                dst.describe(a),
                dst.describe(b)
            ))
        })
    };

    for x in 0..=n {
        let outcome = functor(&src.identity(x))
            .and_then(|m| compare(&m, &dst.identity(x), &|| "F(id)".into()));
        law("identities", format!("X={x}"), outcome);
        for k in Frobenius::ALL {
            let outcome = functor(&src.generator(x, k))
                .and_then(|m| compare(&m, &dst.generator(x, k), &|| format!("F({})", k.name())));
            law(
                "frobenius preservation",
                format!("X={x},{}", k.name()),
                outcome,
            );
        }
        for y in 0..=n {
            let outcome = functor(&src.braid(x, y))
                .and_then(|m| compare(&m, &dst.braid(x, y), &|| "F(σ)".into()));
            law("symmetry preservation", format!("X={x},Y={y}"), outcome);
        }
    }

    let dst_compare = |a: &D::Mor, b: &D::Mor, what: String| -> Result<Option<String>> {
        compare(a, b, &|| what.clone())
    };
    results.push(sampled_law("composition", opts.cases, |_| {
        let (x, y, z) = (
            rng.gen_range(0..=n),
            rng.gen_range(0..=n),
            rng.gen_range(0..=n),
        );
        let f = src.sample(x, y, opts.budget, &mut rng);
        let g = src.sample(y, z, opts.budget, &mut rng);
        let lhs = functor(&src.compose(&f, &g)?)?;
        let rhs = dst.compose(&functor(&f)?, &functor(&g)?)?;
        dst_compare(
            &lhs,
            &rhs,
            format!(
                "F(f;g) with f = {}, g = {}",
                src.describe(&f),
                src.describe(&g)
            ),
        )
    }));
    results.push(sampled_law("tensor", opts.cases, |_| {
        let (x, y) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let (xp, yp) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let f = src.sample(x, y, opts.budget, &mut rng);
        let g = src.sample(xp, yp, opts.budget, &mut rng);
        let lhs = functor(&src.tensor(&f, &g)?)?;
        let rhs = dst.tensor(&functor(&f)?, &functor(&g)?)?;
        dst_compare(
            &lhs,
            &rhs,
            format!(
                "F(f⊗g) with f = {}, g = {}",
                src.describe(&f),
                src.describe(&g)
            ),
        )
    }));

    Report { results }
}

/// Runs `case` `cases` times and summarises: the first failing case, if
/// any, becomes the counterexample.
fn sampled_law(
    name: &str,
    cases: usize,
    mut case: impl FnMut(usize) -> Result<Option<String>>,
) -> CheckResult {
    let mut outcome = Ok(None);
    for i in 0..cases {
        match case(i) {
            Ok(None) => {}
            other => {
                outcome = other;
                break;
            }
        }
    }
    let (status, counterexample) = match outcome {
        Ok(None) => (Status::Pass, None),
        Ok(Some(c)) => (Status::Fail, Some(c)),
        Err(e) => (Status::Error, Some(e.to_string())),
    };
    CheckResult {
        axiom: name.to_string(),
        object: format!("{cases} samples"),
        status,
        counterexample,
    }
}

/// Sampled symmetric monoidal category laws: associativity and unitality of
/// composition, the interchange law, and naturality of the symmetry.
pub fn check_category_laws<I: HypergraphInstance + ?Sized>(inst: &I, opts: FunctorCheck) -> Report {
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let n = opts.max_size;
    let b = opts.budget;
    let size = |rng: &mut StdRng| rng.gen_range(0..=n);
    let differ = |a: &I::Mor, c: &I::Mor, what: String| -> Result<Option<String>> {
        Ok((!inst.equal(a, c)?)
            .then(|| format!("{what}: {} vs {}", inst.describe(a), inst.describe(c))))
    };
    let mut results = Vec::new();
    results.push(sampled_law("composition associativity", opts.cases, |_| {
        let (w, x, y, z) = (
            size(&mut rng),
            size(&mut rng),
            size(&mut rng),
            size(&mut rng),
        );
        let f = inst.sample(w, x, b, &mut rng);
        let g = inst.sample(x, y, b, &mut rng);
        let h = inst.sample(y, z, b, &mut rng);
        let l = inst.compose(&inst.compose(&f, &g)?, &h)?;
        let r = inst.compose(&f, &inst.compose(&g, &h)?)?;
        differ(
            &l,
            &r,
            format!(
                "f = {}, g = {}, h = {}",
                inst.describe(&f),
                inst.describe(&g),
                inst.describe(&h)
            ),
        )
    }));
    results.push(sampled_law("identity laws", opts.cases, |_| {
        let (x, y) = (size(&mut rng), size(&mut rng));
        let f = inst.sample(x, y, b, &mut rng);
        let l = inst.compose(&inst.identity(x), &f)?;
        let r = inst.compose(&f, &inst.identity(y))?;
        if let Some(c) = differ(&l, &f, format!("id;f with f = {}", inst.describe(&f)))? {
            return Ok(Some(c));
        }
        differ(&r, &f, format!("f;id with f = {}", inst.describe(&f)))
    }));
    results.push(sampled_law("interchange", opts.cases, |_| {
        let (x, y, z) = (size(&mut rng), size(&mut rng), size(&mut rng));
        let (xp, yp, zp) = (size(&mut rng), size(&mut rng), size(&mut rng));
        let f = inst.sample(x, y, b, &mut rng);
        let g = inst.sample(y, z, b, &mut rng);
        let fp = inst.sample(xp, yp, b, &mut rng);
        let gp = inst.sample(yp, zp, b, &mut rng);
        let l = inst.compose(&inst.tensor(&f, &fp)?, &inst.tensor(&g, &gp)?)?;
        let r = inst.tensor(&inst.compose(&f, &g)?, &inst.compose(&fp, &gp)?)?;
        differ(&l, &r, "(f⊗f');(g⊗g') vs (f;g)⊗(f';g')".into())
    }));
    results.push(sampled_law("symmetry naturality", opts.cases, |_| {
        let (x, y, xp, yp) = (
            size(&mut rng),
            size(&mut rng),
            size(&mut rng),
            size(&mut rng),
        );
        let f = inst.sample(x, y, b, &mut rng);
        let g = inst.sample(xp, yp, b, &mut rng);
        let l = inst.compose(&inst.tensor(&f, &g)?, &inst.braid(y, yp))?;
        let r = inst.compose(&inst.braid(x, xp), &inst.tensor(&g, &f)?)?;
        differ(
            &l,
            &r,
            format!("f = {}, g = {}", inst.describe(&f), inst.describe(&g)),
        )
    }));
    Report { results }
}
