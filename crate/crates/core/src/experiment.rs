//! Randomized comparison of the coefficient tables with the tensor oracle.

use crate::builder::{build, AmbitoricSpec, FormType};
use crate::classifier::{bach_flat_check, extremal_check};
use crate::error::{Error, Result};
use crate::sampler::Sampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRecord {
    pub spec: AmbitoricSpec,
    /// Generated to satisfy the extremality conditions.
    pub satisfying: bool,
    pub extremal: bool,
    /// Bach-flat verdict, for extremal instances.
    pub bach_flat: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct ExperimentOutcome {
    pub records: Vec<InstanceRecord>,
    /// The first instance on which a biconditional failed, with the reason.
    pub failure: Option<(AmbitoricSpec, String)>,
}

impl ExperimentOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn count(&self, f: impl Fn(&InstanceRecord) -> bool) -> usize {
        self.records.iter().filter(|r| f(r)).count()
    }
}

/// Check one instance: table vs oracle for extremality, and for Bach-flatness
/// when extremal. Returns the record or a description of the disagreement.
pub fn check_instance(spec: &AmbitoricSpec, satisfying: bool) -> Result<std::result::Result<InstanceRecord, String>> {
    let model = build(spec)?;
    let ext = match extremal_check(&model) {
        Ok(e) => e,
        Err(Error::Inconsistency(m)) => return Ok(Err(m)),
        Err(e) => return Err(e),
    };
    if ext.holds != satisfying {
        return Ok(Err(format!("generated as satisfying={satisfying} but the table says {}", ext.holds)));
    }
    if ext.oracle_plus != ext.holds || ext.oracle_minus != ext.holds {
        return Ok(Err(format!(
            "extremality: table {} but Killing residual zero for g+ {} / g- {}",
            ext.holds, ext.oracle_plus, ext.oracle_minus
        )));
    }
    let mut bach_flat = None;
    if ext.holds {
        let b = match bach_flat_check(&model, &ext) {
            Ok(b) => b,
            Err(Error::Inconsistency(m)) => return Ok(Err(m)),
            Err(e) => return Err(e),
        };
        if b.holds != b.oracle {
            return Ok(Err(format!("Bach-flat: table {} but bach(g+) zero is {}", b.holds, b.oracle)));
        }
        bach_flat = Some(b.holds);
    }
    Ok(Ok(InstanceRecord { spec: spec.clone(), satisfying, extremal: ext.holds, bach_flat }))
}

/// `trials` extremal and `trials` non-extremal instances of a named type; half
/// of the extremal ones are drawn Bach-flat.
pub fn table_experiment(form_type: FormType, trials: usize, seed: u64) -> Result<ExperimentOutcome> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    if form_type == FormType::General {
        return Err(Error::Precondition("the table experiment needs a named type".into()));
    }
    let mut sampler = Sampler::new(seed);
    let mut out = ExperimentOutcome::default();
    for i in 0..trials {
        let sat = if i % 2 == 1 { sampler.bach_flat_spec(form_type) } else { sampler.extremal_spec(form_type) };
        let viol = sampler.non_extremal_spec(form_type);
        for (spec, satisfying) in [(sat, true), (viol, false)] {
            match check_instance(&spec, satisfying)? {
                Ok(r) => out.records.push(r),
                Err(why) => {
                    out.failure = Some((spec, why));
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}
