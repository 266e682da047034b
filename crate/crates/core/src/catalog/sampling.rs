use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{eval_constant, CatalogError, Condition, Domain, IdentityRecord};
use crate::exactnum::{format_rational, Rational};
use crate::hyperseries::ParamMap;

/// Bound on numerators and denominators of drawn rationals.
const BOUND: i64 = 20;
/// Draws attempted per requested sample before giving up.
const ATTEMPTS_PER_SAMPLE: usize = 2000;

fn draw(rng: &mut ChaCha8Rng, domain: &Domain) -> Rational {
    match domain {
        Domain::Rational => Rational::new(rng.gen_range(-BOUND..=BOUND).into(), rng.gen_range(1..=BOUND).into()),
        Domain::Integer { min, max } => Rational::from_integer(rng.gen_range(*min..=*max).into()),
    }
}

/// Adds the constrained parameters to an assignment of the free ones.
pub fn complete_sample(record: &IdentityRecord, free: &ParamMap) -> Result<ParamMap, CatalogError> {
    let mut p = ParamMap::new();
    for decl in &record.params {
        let v = free.get(&decl.name).ok_or_else(|| CatalogError::InvalidRecord {
            id: record.id.clone(),
            reason: format!("missing value for parameter {}", decl.name),
        })?;
        p.insert(decl.name.clone(), v.clone());
    }
    for c in &record.constraints {
        let v = eval_constant(&c.value, &p)
            .map_err(|e| CatalogError::InvalidRecord { id: record.id.clone(), reason: format!("constraint {c}: {e}") })?;
        p.insert(c.name.clone(), v);
    }
    Ok(p)
}

/// `Ok(())` when the (complete) sample avoids every declared degeneracy, else the first violation.
pub fn admissibility(record: &IdentityRecord, p: &ParamMap) -> Result<(), String> {
    for decl in &record.params {
        let Some(v) = p.get(&decl.name) else {
            return Err(format!("parameter {} has no value", decl.name));
        };
        if decl.domain == Domain::Rational && v.is_integer() {
            return Err(format!("{} = {} is an integer", decl.name, format_rational(v)));
        }
    }
    for c in &record.constraints {
        let want = eval_constant(&c.value, p).map_err(|e| e.to_string())?;
        if p.get(&c.name) != Some(&want) {
            return Err(format!("constraint {c} does not hold"));
        }
    }
    for cond in &record.conditions {
        let (src, ok): (&String, fn(&Rational) -> bool) = match cond {
            Condition::NonInteger(s) => (s, |v: &Rational| !v.is_integer()),
            Condition::Positive(s) => (s, |v: &Rational| v.is_positive()),
            Condition::NonZero(s) => (s, |v: &Rational| !v.is_zero()),
        };
        let v = eval_constant(src, p).map_err(|e| e.to_string())?;
        if !ok(&v) {
            return Err(format!("{cond:?} fails: {src} = {}", format_rational(&v)));
        }
    }
    Ok(())
}

/// Deterministic admissible parameter samples for a record.
///
/// The stream depends only on the seed and the free-parameter declarations, so
/// records with the same parameters and conditions see the same samples.
pub fn sample_parameters(record: &IdentityRecord, seed: u64, count: usize) -> Result<Vec<ParamMap>, CatalogError> {
    record.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut last_reason = String::from("no draws");
    for _ in 0..count.saturating_mul(ATTEMPTS_PER_SAMPLE) {
        if out.len() == count {
            break;
        }
        let free: ParamMap = record.params.iter().map(|d| (d.name.clone(), draw(&mut rng, &d.domain))).collect();
        let p = complete_sample(record, &free)?;
        match admissibility(record, &p) {
            Ok(()) => out.push(p),
            Err(reason) => last_reason = reason,
        }
    }
    if out.len() < count {
        return Err(CatalogError::Unsatisfiable { id: record.id.clone(), wanted: count, found: out.len(), reason: last_reason });
    }
    Ok(out)
}
