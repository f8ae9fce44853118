use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hochschild_core::cohomology::{bar_oracle, cohomology_table, CohomologyError};
use hochschild_core::hochschild::{
    check_dd_zero, compare_formulations, CochainComplex, Engine, EngineConfig, EngineError,
};
use hochschild_core::monoidal::{Category, CategoryKind, MonoidalError, Object, Word};
use hochschild_core::objects::{check_bimodule, check_monoid_axioms};
use hochschild_core::report::{AxiomReport, DiagramOutcome};
use hochschild_core::Scalar;

use crate::instance::{Loaded, Source};
use crate::report::{dump, hh_row, ComplexDump, Report, Suite};
use crate::Failure;

/// Largest flattened rank of a coherence diagram the checker will build.
const COHERENCE_RANK_LIMIT: usize = 1024;
const RANDOM_PENTAGONS: usize = 48;
const RANDOM_TRIANGLES: usize = 16;
const MAX_RANDOM_LEAVES: usize = 5;

pub struct Options {
    pub max_degree: usize,
    pub seed: Option<u64>,
    pub rank_ceiling: usize,
}

/// Report plus the exit code it implies.
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

fn monoidal_failure(e: MonoidalError) -> Failure {
    Failure::internal(e.to_string())
}

fn engine_failure(e: EngineError) -> Failure {
    match e {
        EngineError::Axioms(_) => Failure::axiom(e.to_string()),
        EngineError::ResourceCeiling { .. } => Failure::ceiling(e.to_string()),
        EngineError::IndexOutOfRange(_) => Failure::usage(e.to_string()),
        _ => Failure::internal(e.to_string()),
    }
}

fn cohomology_failure(e: CohomologyError) -> Failure {
    match e {
        CohomologyError::UnsupportedRing(_) | CohomologyError::NotFreeMod => Failure::parse(e.to_string()),
        _ => Failure::internal(e.to_string()),
    }
}

fn engine<'a, T: Scalar>(l: &'a Loaded<T>, opts: &Options) -> Result<Engine<'a, T>, Failure> {
    let config = EngineConfig {
        rank_ceiling: opts.rank_ceiling,
        require_axioms: true,
    };
    Engine::new(&l.cat, &l.monoid, &l.bimodule, config).map_err(engine_failure)
}

fn require_linear_algebra(src: &Source) -> Result<(), Failure> {
    if src.ring.supports_linear_algebra() {
        Ok(())
    } else {
        Err(Failure::parse(format!(
            "ring: cohomology needs a field or Z, not {}",
            src.ring
        )))
    }
}

fn code_for(report: &Report, failure_code: i32) -> i32 {
    if report.all_checks_pass() {
        0
    } else {
        failure_code
    }
}

// ---- check ---------------------------------------------------------------------

fn random_word(rng: &mut ChaCha8Rng, leaves: usize, pool: &[Arc<Word>]) -> Arc<Word> {
    if leaves == 1 {
        return pool[rng.gen_range(0..pool.len())].clone();
    }
    let split = rng.gen_range(1..leaves);
    Word::tensor(random_word(rng, split, pool), random_word(rng, leaves - split, pool))
}

fn within_limit(objs: &[&Object]) -> bool {
    objs.iter()
        .try_fold(1usize, |acc, o| acc.checked_mul(o.rank()).filter(|&r| r <= COHERENCE_RANK_LIMIT))
        .is_some()
}

fn pentagon_into<T: Scalar>(cat: &Category<T>, suite: &mut Suite, q: [&Object; 4]) -> Result<(), Failure> {
    if !within_limit(&q) {
        suite.skip();
        return Ok(());
    }
    let o = cat.check_pentagon(q[0], q[1], q[2], q[3]).map_err(monoidal_failure)?;
    suite.absorb(&single(o));
    Ok(())
}

fn triangle_into<T: Scalar>(cat: &Category<T>, suite: &mut Suite, x: &Object, y: &Object) -> Result<(), Failure> {
    if !within_limit(&[x, y]) {
        suite.skip();
        return Ok(());
    }
    let o = cat.check_triangle(x, y).map_err(monoidal_failure)?;
    suite.absorb(&single(o));
    Ok(())
}

fn single<T: Scalar>(o: DiagramOutcome<T>) -> AxiomReport<T> {
    let mut r = AxiomReport::new();
    r.push(o);
    r
}

/// Pentagon and triangle on every tuple of basic objects, plus random
/// bracketed words when a seed is given.
fn coherence<T: Scalar>(l: &Loaded<T>, seed: Option<u64>) -> Result<Suite, Failure> {
    let cat = &l.cat;
    let mut pool = vec![cat.unit(), l.monoid.m.clone()];
    if l.bimodule_dim.is_some() {
        pool.push(l.bimodule.x.clone());
    }
    let mut suite = Suite::new("coherence");
    for a in &pool {
        for b in &pool {
            triangle_into(cat, &mut suite, a, b)?;
            for c in &pool {
                for d in &pool {
                    pentagon_into(cat, &mut suite, [a, b, c, d])?;
                }
            }
        }
    }
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let leaves: Vec<Arc<Word>> = pool.iter().map(|o| o.word().clone()).collect();
        let object = |rng: &mut ChaCha8Rng, n: usize| cat.object(random_word(rng, n, &leaves)).map_err(monoidal_failure);
        for _ in 0..RANDOM_PENTAGONS {
            // leaf counts of the four words, at least one each
            let mut counts = [1usize; 4];
            for _ in 0..rng.gen_range(0..=MAX_RANDOM_LEAVES - 4) {
                counts[rng.gen_range(0..4)] += 1;
            }
            let w = object(&mut rng, counts[0])?;
            let x = object(&mut rng, counts[1])?;
            let y = object(&mut rng, counts[2])?;
            let z = object(&mut rng, counts[3])?;
            pentagon_into(cat, &mut suite, [&w, &x, &y, &z])?;
        }
        for _ in 0..RANDOM_TRIANGLES {
            let n = rng.gen_range(1..MAX_RANDOM_LEAVES);
            let x = object(&mut rng, n)?;
            let m = rng.gen_range(1..=MAX_RANDOM_LEAVES - n);
            let y = object(&mut rng, m)?;
            triangle_into(cat, &mut suite, &x, &y)?;
        }
    }
    Ok(suite)
}

pub fn check<T: Scalar>(l: &Loaded<T>, opts: &Options, mut report: Report) -> Result<Outcome, Failure> {
    let monoid = check_monoid_axioms(&l.cat, &l.monoid).map_err(monoidal_failure)?;
    report.checks.push(Suite::from_report("monoid axioms", &monoid));
    let bimodule = check_bimodule(&l.cat, &l.monoid, &l.bimodule).map_err(monoidal_failure)?;
    report.checks.push(Suite::from_report("bimodule axioms", &bimodule));
    report.checks.push(coherence(l, opts.seed)?);
    let code = code_for(&report, Failure::AXIOM);
    Ok(Outcome { report, code })
}

// ---- complex / cohomology / compare -------------------------------------------

/// Computations assume a monoidal category: a cocycle table that breaks the
/// pentagon is refused like a failing monoid axiom.
fn require_coherent<T: Scalar>(l: &Loaded<T>, report: &mut Report) -> Result<(), Failure> {
    let suite = coherence(l, None)?;
    if !suite.ok() {
        let first = &suite.failures[0];
        return Err(Failure::axiom(format!(
            "coherence fails: {} ({})",
            first.name,
            first.detail.as_deref().unwrap_or("")
        )));
    }
    report.checks.push(suite);
    Ok(())
}

fn complex_of<T: Scalar>(l: &Loaded<T>, opts: &Options, report: &mut Report) -> Result<CochainComplex<T>, Failure> {
    require_coherent(l, report)?;
    engine(l, opts)?
        .build_cochain_complex(opts.max_degree)
        .map_err(engine_failure)
}

pub fn complex<T: Scalar>(l: &Loaded<T>, opts: &Options, mut report: Report) -> Result<Outcome, Failure> {
    let c = complex_of(l, opts, &mut report)?;
    report.checks.push(Suite::from_report("d∘d = 0", &check_dd_zero(&c)));
    report.complex = Some(ComplexDump {
        ranks: c.spaces.iter().map(|s| s.rank()).collect(),
        differentials: c.differentials.iter().enumerate().map(|(k, d)| dump(k, d)).collect(),
    });
    let code = code_for(&report, Failure::INTERNAL);
    Ok(Outcome { report, code })
}

pub fn cohomology<T: Scalar>(src: &Source, l: &Loaded<T>, opts: &Options, mut report: Report) -> Result<Outcome, Failure> {
    require_linear_algebra(src)?;
    let c = complex_of(l, opts, &mut report)?;
    report.checks.push(Suite::from_report("d∘d = 0", &check_dd_zero(&c)));
    let table = cohomology_table(&c).map_err(cohomology_failure)?;
    if matches!(l.cat.kind(), CategoryKind::FreeMod) {
        let oracle = bar_oracle(&l.cat, &l.monoid, &l.bimodule, opts.max_degree).map_err(cohomology_failure)?;
        let mut suite = Suite::new("strict bar complex oracle");
        for (g, o) in table.iter().zip(&oracle) {
            let detail = (g != o).then(|| format!("degree {}: engine {g}, oracle {o}", g.degree));
            suite.record("oracle agreement", g == o, detail);
        }
        report.checks.push(suite);
    }
    report.cohomology = Some(table.iter().map(|g| hh_row(g, src.ring)).collect());
    let code = code_for(&report, Failure::INTERNAL);
    Ok(Outcome { report, code })
}

pub fn compare<T: Scalar>(l: &Loaded<T>, opts: &Options, mut report: Report) -> Result<Outcome, Failure> {
    require_coherent(l, &mut report)?;
    let e = engine(l, opts)?;
    let c = e.build_cochain_complex(opts.max_degree).map_err(engine_failure)?;
    let a = e.build_cosimplicial(opts.max_degree).map_err(engine_failure)?;
    let cmp = compare_formulations(&c, &a).map_err(engine_failure)?;
    let differing: Vec<String> = cmp
        .outcomes
        .iter()
        .enumerate()
        .filter(|(_, o)| o.failed())
        .map(|(k, _)| k.to_string())
        .collect();
    report.checks.push(Suite::from_report("formulations", &cmp));
    report.comparison = Some(if differing.is_empty() {
        "EQUAL at all degrees".to_string()
    } else {
        format!("DIFFERENT at degrees {}", differing.join(", "))
    });
    let code = code_for(&report, Failure::INTERNAL);
    Ok(Outcome { report, code })
}
