//! JSON shapes for command output. Field order is declaration order, so
//! output is stable for diffing.

use serde::Serialize;

use crate::algebra::{FieldDescriptor, FieldElement};
use crate::chebyshev::Parity;
use crate::identity::{CompositionIdentity, Hypotheses, QuadraticIdentity};
use crate::liouville::{LambdaOrbit, OrbitEntry, ScanReport};
use crate::pell::{PellClassification, PellSolution};
use crate::poly::Polynomial;
use crate::search::{SearchConfig, SearchCounters, SearchReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
    pub field: FieldDescriptor,
}

impl<E: FieldElement> From<&Polynomial<E>> for PolyJson {
    fn from(p: &Polynomial<E>) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(|c| c.value_text()).collect(),
            field: p.descriptor(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityJson {
    pub f: PolyJson,
    pub g: PolyJson,
    pub h: PolyJson,
    pub m: u32,
}

impl<E: FieldElement> From<&CompositionIdentity<E>> for IdentityJson {
    fn from(id: &CompositionIdentity<E>) -> Self {
        IdentityJson {
            f: id.f().into(),
            g: id.g().into(),
            h: id.h().into(),
            m: id.m(),
        }
    }
}

impl<E: FieldElement> From<&QuadraticIdentity<E>> for IdentityJson {
    fn from(id: &QuadraticIdentity<E>) -> Self {
        match id {
            QuadraticIdentity::Base(id) => id.into(),
            QuadraticIdentity::Extension(id) => id.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub holds: bool,
    pub hypotheses: Option<Hypotheses>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChebyshevJson {
    pub kind: &'static str,
    pub n: i64,
    pub poly: PolyJson,
    pub parity: Parity,
}

#[derive(Debug, Clone, Serialize)]
pub struct PellJson {
    pub p: PolyJson,
    pub q: PolyJson,
    pub classification: Option<PellClassification>,
}

impl<E: FieldElement> From<&PellSolution<E>> for PellJson {
    fn from(s: &PellSolution<E>) -> Self {
        PellJson {
            p: (&s.p).into(),
            q: (&s.q).into(),
            classification: s.classification,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub config: SearchConfig,
    pub monic_f_only: bool,
    pub solutions: Vec<IdentityJson>,
    pub counters: SearchCounters,
    pub duration_ms: u128,
}

impl From<&SearchReport> for SearchJson {
    fn from(r: &SearchReport) -> Self {
        SearchJson {
            config: r.config.clone(),
            monic_f_only: r.monic_f_only,
            solutions: r.solutions.iter().map(IdentityJson::from).collect(),
            counters: r.counters,
            duration_ms: r.duration.as_millis(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitJson {
    pub f: PolyJson,
    pub g: PolyJson,
    pub seed: String,
    pub entries: Vec<OrbitEntry>,
    pub truncated: bool,
}

impl From<&LambdaOrbit> for OrbitJson {
    fn from(o: &LambdaOrbit) -> Self {
        OrbitJson {
            f: (&o.f).into(),
            g: (&o.g).into(),
            seed: o.seed.to_string(),
            entries: o.entries.clone(),
            truncated: o.truncated,
        }
    }
}

pub type ScanJson = ScanReport;
