//! Deterministic JSON views of the library types. Floating values are
//! rounded to 9 decimal digits; object keys are emitted in sorted order,
//! so serialized output is byte-stable for a given input and seed.

use serde_json::{json, Value};

use crate::action::{ActionMatrix, InductionRow, ModuleAxiomReport};
use crate::chartable::CharacterTable;
use crate::diagram::Diagram;
use crate::group::FiniteGroup;
use crate::labels::{EuclideanLabel, LorentzianLabel};
use crate::mckay::McKayGraph;
use crate::time_functor::{ColaxReport, HomSearch, ProductModuleReport};

/// Rounds to 9 decimal digits, normalizing -0.
pub fn round9(v: f64) -> f64 {
    let r = (v * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn group_json(g: &FiniteGroup) -> Value {
    json!({
        "spec": g.spec.code(),
        "name": g.spec.name(),
        "order": g.order,
        "is_binary": g.is_binary,
        "classes": g.classes.iter().map(|c| json!({
            "representative": c.representative,
            "size": c.size,
            "angle": round9(c.angle),
        })).collect::<Vec<_>>(),
    })
}

pub fn chartable_json(t: &CharacterTable) -> Value {
    json!({
        "group": t.group.spec.code(),
        "order": t.group.order,
        "classes": t.group.classes.iter().map(|c| json!({
            "size": c.size,
            "angle": round9(c.angle),
        })).collect::<Vec<_>>(),
        "irreps": t.irreps.iter().map(|r| json!({
            "name": r.name,
            "dim": r.dim,
        })).collect::<Vec<_>>(),
        "chi": t.chi.iter().map(|row| row.iter()
            .map(|z| json!([round9(z.re), round9(z.im)]))
            .collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn mckay_json(g: &McKayGraph) -> Value {
    json!({
        "nodes": g.nodes.iter().map(|(name, dim)| json!({
            "name": name,
            "dim": dim,
        })).collect::<Vec<_>>(),
        "adjacency": g.adjacency,
        "ade_type": g.ade_type.to_string(),
    })
}

pub fn restriction_json(t: &CharacterTable, twice_j: u32, mults: &[u32]) -> Value {
    json!({
        "group": t.group.spec.code(),
        "twice_j": twice_j,
        "multiplicities": t.irreps.iter().zip(mults).map(|(r, &m)| json!([r.name, m]))
            .collect::<Vec<_>>(),
    })
}

pub fn action_matrices_json(t: &CharacterTable, matrices: &[ActionMatrix]) -> Value {
    let mut map = serde_json::Map::new();
    for a in matrices {
        map.insert(a.j.twice_j.to_string(), json!(a.m));
    }
    json!({
        "group": t.group.spec.code(),
        "irreps": t.irreps.iter().map(|r| r.name.clone()).collect::<Vec<_>>(),
        "matrices": Value::Object(map),
    })
}

pub fn module_axiom_json(r: &ModuleAxiomReport) -> Value {
    json!({
        "group": r.group,
        "twice_j_max": r.twice_j_max,
        "pairs_checked": r.pairs_checked,
        "violations": r.violations.iter().map(|v| json!({
            "twice_j1": v.twice_j1,
            "twice_j2": v.twice_j2,
            "rho": v.rho,
            "sigma": v.sigma,
            "lhs": v.lhs,
            "rhs": v.rhs,
        })).collect::<Vec<_>>(),
    })
}

pub fn induction_json(t: &CharacterTable, row: &InductionRow) -> Value {
    json!({
        "group": t.group.spec.code(),
        "irrep": t.irreps[row.rho].name,
        "entries": row.spins.iter().zip(&row.multiplicities).map(|(j, &m)| json!({
            "twice_j": j.twice_j,
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn euclidean_json(l: &EuclideanLabel) -> Value {
    json!({ "twice_jl": l.twice_jl, "twice_jr": l.twice_jr })
}

pub fn lorentzian_json(l: &LorentzianLabel) -> Value {
    json!({ "twice_k": l.twice_k, "rho": l.rho })
}

pub fn colax_json(r: &ColaxReport) -> Value {
    json!({ "n": r.n_abc, "image": r.image_mult, "injective": r.injective })
}

pub fn product_module_json(r: &ProductModuleReport) -> Value {
    let entry = |e: &crate::time_functor::ProductModuleEntry| {
        json!({
            "twice_j": e.twice_j,
            "m": e.m,
            "c": e.c,
            "left": e.left,
            "right": e.right,
        })
    };
    json!({
        "group": r.group,
        "twice_j_max": r.twice_j_max,
        "entries_checked": r.entries.len(),
        "injection_violations": r.injection_violations.iter().map(entry).collect::<Vec<_>>(),
        "equality_failures": r.equality_failures.iter().map(entry).collect::<Vec<_>>(),
    })
}

pub fn homs_json(s: &HomSearch) -> Value {
    json!({
        "generators": s.generators,
        "count": s.count(),
        "witnesses": s.witnesses,
    })
}

pub fn ample_json(d: &Diagram) -> Value {
    json!({
        "vertices": d.vertex_count(),
        "edges": d.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "ample": d.is_ample(),
    })
}

/// Parses the diagram input schema {"vertices": n, "edges": [[u, v], ...]}.
pub fn diagram_from_json(v: &Value) -> crate::error::Result<Diagram> {
    let bad = |msg: &str| crate::error::Error::InvalidDiagram(msg.into());
    let vertices = v
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing integer field `vertices`"))? as usize;
    let edges_val = v
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing array field `edges`"))?;
    let mut edges = Vec::with_capacity(edges_val.len());
    for e in edges_val {
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge must be [u, v]"))?;
        let u = pair[0].as_u64().ok_or_else(|| bad("edge endpoint must be an integer"))?;
        let v = pair[1].as_u64().ok_or_else(|| bad("edge endpoint must be an integer"))?;
        edges.push((u as usize, v as usize));
    }
    Diagram::new(vertices, &edges)
}
