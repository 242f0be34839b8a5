//! Brute-force summand counting for finite groups.
//!
//! For abelian groups the direct summands, the retracts and the images of
//! idempotent endomorphisms coincide up to isomorphism, so the number of
//! summand classes can be read off the idempotents without using the
//! closed-form count.
//!
//! An idempotent `f` is the projection onto `im f` along `ker f`, and every
//! pair of complementary subgroups arises this way exactly once. The oracle
//! therefore walks the subgroup lattice, builds the projection matrix for
//! each subgroup that has a complement, checks `f∘f = f` on the matrix and
//! classifies the image twice: by Smith normal form of the generator matrix
//! and by counting element orders. A raw sweep over every matrix is also
//! available for groups whose endomorphism ring is small enough.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::endo::{
    endomorphism_count, for_each_endomorphism, image_elements, image_of_endomorphism, projection,
};
use super::finite::{FiniteGroup, MAX_ORACLE_ORDER};
use crate::error::{Error, Result};
use crate::fga::AbelianGroup;

pub const DEFAULT_ORACLE_CAP: u64 = 64;

/// Largest endomorphism ring the raw matrix sweep will walk.
pub const SWEEP_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest group order the oracle will materialize.
    pub max_order: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_order: DEFAULT_ORACLE_CAP,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(max_order: u64) -> Result<Self> {
        if max_order == 0 || max_order > MAX_ORACLE_ORDER {
            return Err(Error::InvalidInput(format!(
                "oracle cap must be between 1 and {MAX_ORACLE_ORDER}, got {max_order}"
            )));
        }
        Ok(OracleConfig { max_order })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    /// Distinct isomorphism classes of idempotent images.
    pub classes: BTreeSet<AbelianGroup>,
    /// Number of idempotent endomorphisms (raw maps, not classes).
    pub idempotents: u64,
}

impl OracleReport {
    pub fn class_count(&self) -> u64 {
        self.classes.len() as u64
    }
}

pub fn oracle_count_summands(g: &AbelianGroup, config: OracleConfig) -> Result<u64> {
    Ok(oracle_report(g, config)?.class_count())
}

/// Idempotents via complementary subgroup pairs.
pub fn oracle_report(g: &AbelianGroup, config: OracleConfig) -> Result<OracleReport> {
    let fg = FiniteGroup::new(g, config.max_order)?;
    let lattice = fg.lattice();
    let mut classes = BTreeSet::new();
    for (h, ks) in lattice.subgroups.iter().zip(&lattice.complements) {
        let Some(&k) = ks.first() else { continue };
        let f = projection(&fg, h, &lattice.subgroups[k])?;
        if !f.is_idempotent() {
            return Err(Error::Inconsistent(format!(
                "projection {f:?} is not idempotent"
            )));
        }
        let elems = image_elements(&fg, &f);
        if &elems != h {
            return Err(Error::Inconsistent(format!(
                "projection {f:?} has the wrong image"
            )));
        }
        let by_snf = image_of_endomorphism(g, &f)?;
        let by_elements = fg.classify(h);
        if by_snf != by_elements {
            return Err(Error::Inconsistent(format!(
                "image classifiers disagree: {by_snf} vs {by_elements}"
            )));
        }
        classes.insert(by_snf);
    }
    Ok(OracleReport {
        classes,
        idempotents: lattice.complementary_pairs(),
    })
}

/// Idempotents by testing every endomorphism matrix.
pub fn sweep_report(g: &AbelianGroup, config: OracleConfig) -> Result<OracleReport> {
    let fg = FiniteGroup::new(g, config.max_order)?;
    let total = endomorphism_count(fg.moduli());
    if total.to_u64().is_none_or(|n| n > SWEEP_LIMIT) {
        return Err(Error::TooMany {
            what: "endomorphism ring",
            count: total.to_string(),
            limit: SWEEP_LIMIT,
        });
    }
    let mut classes = BTreeSet::new();
    let mut idempotents = 0u64;
    let mut failure = None;
    for_each_endomorphism(fg.moduli(), |m| {
        if failure.is_some() || !m.is_idempotent() {
            return;
        }
        idempotents += 1;
        let class = fg.classify(&image_elements(&fg, m));
        if classes.insert(class.clone()) {
            match image_of_endomorphism(g, m) {
                Ok(c) if c == class => {}
                Ok(c) => {
                    failure = Some(Error::Inconsistent(format!(
                        "image classifiers disagree: {c} vs {class}"
                    )))
                }
                Err(e) => failure = Some(e),
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(OracleReport {
            classes,
            idempotents,
        }),
    }
}
