//! JSON reports. Field order in each struct is the output order.

use dqalg::classification::{
    count_iso_classes, enumerate_max_types, field_caveat, is_isomorphic_maxdim, iso_invariants, AuxDims,
    EnumerationCase,
};
use dqalg::constructions::CanonicalBlockId;
use dqalg::dq::{detect_type, is_maximal_dq, BlockType, TriangulationIdeal};
use dqalg::{MatSubalgebra, MatrixSpace};
use serde::{Serialize, Serializer};

use crate::doc::{encode_matrix, Grid};
use crate::CliError;

/// An integer, or the string `"not-Dq"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinQ(pub Option<usize>);

impl From<Option<usize>> for MinQ {
    fn from(q: Option<usize>) -> Self {
        MinQ(q)
    }
}

impl Serialize for MinQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Some(q) => s.serialize_u64(q as u64),
            None => s.serialize_str("not-Dq"),
        }
    }
}

fn ids(v: &[CanonicalBlockId]) -> Vec<[usize; 2]> {
    v.iter().map(|id| [id.n, id.k]).collect()
}

fn parts(t: &BlockType) -> Vec<usize> {
    t.parts().to_vec()
}

#[derive(Serialize)]
pub struct Invariants {
    pub radical: usize,
    pub commutator: usize,
    pub radical_times_commutator: usize,
    pub commutator_times_radical: usize,
    pub top_power_times_radical: Option<usize>,
}

impl From<AuxDims> for Invariants {
    fn from(d: AuxDims) -> Self {
        Invariants {
            radical: d.radical,
            commutator: d.commutator,
            radical_times_commutator: d.radical_times_commutator,
            commutator_times_radical: d.commutator_times_radical,
            top_power_times_radical: d.top_power_times_radical,
        }
    }
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub dim: usize,
    pub commutative: bool,
    pub min_q: MinQ,
    #[serde(rename = "type")]
    pub block_type: Option<Vec<usize>>,
    pub triangulation_ideal: Option<&'static str>,
    pub maximal: bool,
    pub block_ids: Option<Vec<[usize; 2]>>,
    pub conjugator: Option<Grid>,
    pub invariants: Option<Invariants>,
    pub field_caveat: bool,
}

pub fn analyze(a: &MatSubalgebra) -> AnalysisReport {
    let r = is_maximal_dq(a);
    let triangulated = r.witness.as_ref().map(|w| w.block_type.clone());
    let block_type = detect_type(a).or(triangulated);
    let inv = iso_invariants(a).ok();
    AnalysisReport {
        n: a.n(),
        dim: a.dim(),
        commutative: a.is_commutative(),
        min_q: MinQ(r.min_q),
        block_type: block_type.as_ref().map(parts),
        triangulation_ideal: r.triangulated_by.map(|t| match t {
            TriangulationIdeal::Commutator => "commutator",
            TriangulationIdeal::Radical => "radical",
        }),
        maximal: r.maximal,
        block_ids: inv.as_ref().and_then(|i| i.block_ids.as_deref().map(ids)),
        conjugator: r.witness.as_ref().map(|w| encode_matrix(&w.conjugator)),
        invariants: inv.map(|i| i.aux_dims.into()),
        field_caveat: field_caveat(a.field()),
    }
}

#[derive(Serialize)]
pub struct TupleReport {
    pub parts: Vec<usize>,
    pub ordered_count: u128,
    pub parameter: usize,
}

#[derive(Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub r: usize,
    /// `"s"` when n/q rounds down to an even number, `"t"` otherwise.
    pub parameter_name: &'static str,
    pub tuples: Vec<TupleReport>,
    pub total_ordered: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordered: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_caveat: Option<bool>,
}

pub fn enumerate(n: usize, q: usize, ordered: bool, count_classes: bool) -> Result<EnumerationReport, CliError> {
    let e = enumerate_max_types(n, q)?;
    let classes = if count_classes { Some(count_iso_classes(n, q)?) } else { None };
    Ok(EnumerationReport {
        n,
        q,
        m: e.m,
        r: e.r,
        parameter_name: match e.case {
            EnumerationCase::EvenQuotient => "s",
            EnumerationCase::OddQuotient => "t",
        },
        tuples: e
            .entries
            .iter()
            .map(|t| TupleReport { parts: parts(&t.tuple), ordered_count: t.ordered_count, parameter: t.parameter })
            .collect(),
        total_ordered: e.total_ordered(),
        ordered: ordered.then(|| e.ordered_tuples().iter().map(parts).collect()),
        field_caveat: classes.map(|_| true),
        classes,
    })
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub isomorphic: bool,
    pub type_left: Vec<usize>,
    pub type_right: Vec<usize>,
    pub blocks_left: Vec<[usize; 2]>,
    pub blocks_right: Vec<[usize; 2]>,
    pub certificate: Option<Grid>,
    pub field_caveat: bool,
}

pub fn classify(a: &MatSubalgebra, b: &MatSubalgebra) -> Result<ClassifyReport, CliError> {
    let v = is_isomorphic_maxdim(a, b)?;
    Ok(ClassifyReport {
        isomorphic: v.isomorphic,
        type_left: parts(&v.type_a),
        type_right: parts(&v.type_b),
        blocks_left: ids(&v.blocks_a),
        blocks_right: ids(&v.blocks_b),
        certificate: v.certificate.as_ref().map(encode_matrix),
        field_caveat: v.field_caveat,
    })
}

#[derive(Serialize)]
pub struct Verification {
    pub q: usize,
    pub structural: bool,
    pub min_q: MinQ,
    pub brute_force: Option<bool>,
    pub budget: Option<u128>,
}
