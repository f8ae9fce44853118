//! Built-in checks that need no instance file.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hochschild_core::cohomology::cohomology_table;
use hochschild_core::hochschild::{check_dd_zero, Engine, EngineConfig};
use hochschild_core::linalg::{smith_normal_form, Matrix};
use hochschild_core::objects::fixtures::unit_monoid;
use hochschild_core::objects::BimoduleObject;
use hochschild_core::simplex::{check_simplicial_identities, factorize, MonotoneMap};
use hochschild_core::{Integer, RingSpec};

use crate::report::Suite;

const SIMPLEX_ORDINALS: usize = 6;
const FACTORIZE_SAMPLES: usize = 500;
const SNF_SAMPLES: usize = 200;
const SNF_MAX_SIDE: usize = 6;
const SNF_ENTRY_BOUND: i64 = 9;

fn random_monotone(rng: &mut ChaCha8Rng) -> MonotoneMap {
    let source = rng.gen_range(0..=SIMPLEX_ORDINALS);
    let target = rng.gen_range(0..=SIMPLEX_ORDINALS);
    let mut values: Vec<usize> = (0..=source).map(|_| rng.gen_range(0..=target)).collect();
    values.sort_unstable();
    MonotoneMap::new(source, target, values).expect("sorted values are monotone")
}

pub fn simplex(seed: u64) -> Suite {
    let mut suite = Suite::new("simplex identities");
    let ids = check_simplicial_identities(SIMPLEX_ORDINALS);
    suite.checked += ids.checked;
    suite.passed += ids.checked - ids.failures.len();
    for f in ids.failures {
        suite.failed += 1;
        suite.failures.push(crate::report::FailureEntry { name: f, detail: None });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..FACTORIZE_SAMPLES {
        let f = random_monotone(&mut rng);
        let back = factorize(&f).recompose();
        suite.record("factorize then recompose", back == f, Some(format!("{f} came back as {back}")));
    }
    suite
}

pub fn snf(seed: u64) -> Suite {
    let mut suite = Suite::new("Smith normal form properties");
    let z = RingSpec::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for sample in 0..SNF_SAMPLES {
        let rows = rng.gen_range(1..=SNF_MAX_SIDE);
        let cols = rng.gen_range(1..=SNF_MAX_SIDE);
        let data = (0..rows * cols)
            .map(|_| Integer::from(rng.gen_range(-SNF_ENTRY_BOUND..=SNF_ENTRY_BOUND)))
            .collect();
        let a = Matrix::from_vec(z, rows, cols, data).expect("sized data");
        match smith_normal_form(&a) {
            Ok(s) => {
                let bad = s.verify(&a);
                let detail = format!("sample {sample}: {}", bad.join("; "));
                suite.record("Smith form", bad.is_empty(), Some(detail));
            }
            Err(e) => suite.fail("Smith form", Some(format!("sample {sample}: {e}"))),
        }
    }
    suite
}

/// The unit monoid over Z through the whole pipeline.
pub fn unit_monoid_end_to_end(max_degree: usize) -> Suite {
    let mut suite = Suite::new("unit monoid end to end");
    let f = unit_monoid::<Integer>(RingSpec::integers());
    let x = BimoduleObject::regular_unchecked(&f.monoid);
    let result = Engine::new(&f.cat, &f.monoid, &x, EngineConfig::default())
        .and_then(|e| e.build_cochain_complex(max_degree))
        .map_err(|e| e.to_string())
        .and_then(|c| {
            suite.record("d∘d = 0", check_dd_zero(&c).all_passed(), None);
            cohomology_table(&c).map_err(|e| e.to_string())
        });
    match result {
        Ok(table) => {
            for g in table {
                let want = usize::from(g.degree == 0);
                let ok = g.free_rank == want && g.torsion.is_empty();
                suite.record("HH of the unit monoid", ok, Some(format!("got {g}, want free {want}")));
            }
        }
        Err(e) => suite.fail("pipeline", Some(e)),
    }
    suite
}
