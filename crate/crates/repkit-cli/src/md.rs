//! Markdown renderings of command outputs. Values are rounded the same
//! way as the JSON exports so both formats stay deterministic.

use repkit::action::{ActionMatrix, InductionRow, ModuleAxiomReport};
use repkit::export::round9;
use repkit::time_functor::{ColaxReport, HomSearch, ProductModuleReport};
use repkit::{CharacterTable, Complex64, Diagram, EuclideanLabel, FiniteGroup, LorentzianLabel};
use repkit::{McKayGraph, SpinLabel};

fn complex(z: &Complex64) -> String {
    let (re, im) = (round9(z.re), round9(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else {
        format!("{re}{im:+}i")
    }
}

pub fn group(g: &FiniteGroup) -> String {
    let mut out = format!(
        "# {} ({}), order {}, binary: {}\n\n| class | representative | size | angle |\n|---|---|---|---|\n",
        g.spec.code(),
        g.spec.name(),
        g.order,
        g.is_binary
    );
    for (i, c) in g.classes.iter().enumerate() {
        out.push_str(&format!(
            "| {i} | {} | {} | {} |\n",
            c.representative,
            c.size,
            round9(c.angle)
        ));
    }
    out
}

pub fn chartable(t: &CharacterTable) -> String {
    let g = &t.group;
    let mut out = format!("# character table of {} (order {})\n\n", g.spec.code(), g.order);
    out.push_str("| irrep | dim |");
    for c in &g.classes {
        out.push_str(&format!(" size {} θ={} |", c.size, round9(c.angle)));
    }
    out.push('\n');
    out.push_str(&"|---".repeat(2 + g.classes.len()));
    out.push_str("|\n");
    for (r, row) in t.chi.iter().enumerate() {
        out.push_str(&format!("| {} | {} |", t.irreps[r].name, t.irreps[r].dim));
        for z in row {
            out.push_str(&format!(" {} |", complex(z)));
        }
        out.push('\n');
    }
    out
}

pub fn mckay(code: &str, g: &McKayGraph) -> String {
    let mut out = format!("# McKay graph of {code}: {}\n\n", g.ade_type);
    out.push_str("nodes: ");
    let labels: Vec<String> =
        g.nodes.iter().map(|(name, dim)| format!("{name}({dim})")).collect();
    out.push_str(&labels.join(", "));
    out.push_str("\n\nedges:\n");
    for i in 0..g.nodes.len() {
        for j in (i + 1)..g.nodes.len() {
            let m = g.adjacency[i][j];
            if m == 1 {
                out.push_str(&format!("- {} -- {}\n", labels[i], labels[j]));
            } else if m >= 2 {
                out.push_str(&format!("- {} -- {} (x{m})\n", labels[i], labels[j]));
            }
        }
    }
    out
}

pub fn restriction(t: &CharacterTable, j: SpinLabel, mults: &[u32]) -> String {
    let mut out = format!(
        "# restriction of spin {j} to {}\n\n| irrep | multiplicity |\n|---|---|\n",
        t.group.spec.code()
    );
    for (irrep, &m) in t.irreps.iter().zip(mults) {
        out.push_str(&format!("| {} | {m} |\n", irrep.name));
    }
    out
}

pub fn action(t: &CharacterTable, matrices: &[ActionMatrix]) -> String {
    let mut out = format!("# action matrices on Rep({})\n", t.group.spec.code());
    for a in matrices {
        out.push_str(&format!("\n## twice_j = {}\n\n| |", a.j.twice_j));
        for irrep in &t.irreps {
            out.push_str(&format!(" {} |", irrep.name));
        }
        out.push('\n');
        out.push_str(&"|---".repeat(1 + t.irreps.len()));
        out.push_str("|\n");
        for (r, row) in a.m.iter().enumerate() {
            out.push_str(&format!("| {} |", t.irreps[r].name));
            for v in row {
                out.push_str(&format!(" {v} |"));
            }
            out.push('\n');
        }
    }
    out
}

pub fn module_axiom(r: &ModuleAxiomReport) -> String {
    let mut out = format!(
        "# module axiom for {} up to twice_j = {}\n\npairs checked: {}\nviolations: {}\n",
        r.group,
        r.twice_j_max,
        r.pairs_checked,
        r.violations.len()
    );
    for v in &r.violations {
        out.push_str(&format!(
            "- (j1, j2) = ({}, {}) at ({}, {}): {} != {}\n",
            v.twice_j1, v.twice_j2, v.rho, v.sigma, v.lhs, v.rhs
        ));
    }
    out
}

pub fn induction(t: &CharacterTable, row: &InductionRow) -> String {
    let mut out = format!(
        "# induction of irrep {} of {}\n\n| twice_j | multiplicity |\n|---|---|\n",
        t.irreps[row.rho].name,
        t.group.spec.code()
    );
    for (j, &m) in row.spins.iter().zip(&row.multiplicities) {
        out.push_str(&format!("| {} | {m} |\n", j.twice_j));
    }
    out
}

pub fn euclidean(l: &EuclideanLabel) -> String {
    format!("F_t: twice_jl = {}, twice_jr = {}\n", l.twice_jl, l.twice_jr)
}

pub fn lorentzian(l: &LorentzianLabel) -> String {
    format!("F_gamma: twice_k = {}, rho = {}\n", l.twice_k, round9(l.rho))
}

pub fn colax(r: &ColaxReport) -> String {
    format!(
        "n = {}, image = {}, injective = {}\n",
        r.n_abc, r.image_mult, r.injective
    )
}

pub fn product_module(r: &ProductModuleReport) -> String {
    let mut out = format!(
        "# product module over F_t for {} up to twice_j = {}\n\nentries checked: {}\ninjection violations: {}\nequality failures (entries >= 2): {}\n",
        r.group,
        r.twice_j_max,
        r.entries.len(),
        r.injection_violations.len(),
        r.equality_failures.len()
    );
    for e in &r.equality_failures {
        out.push_str(&format!(
            "- twice_j {} m {} c {}: left {} < right {}\n",
            e.twice_j, e.m, e.c, e.left, e.right
        ));
    }
    out
}

pub fn homs(s: &HomSearch) -> String {
    let mut out = format!(
        "# injective homomorphisms\n\ngenerators: {:?}\ncount: {}\n",
        s.generators,
        s.count()
    );
    for w in &s.witnesses {
        out.push_str(&format!("- {w:?}\n"));
    }
    out
}

pub fn ample(d: &Diagram) -> String {
    format!(
        "vertices: {}, edges: {}, ample: {}\n",
        d.vertex_count(),
        d.edges().len(),
        d.is_ample()
    )
}

pub fn search_generations(names: &[String]) -> String {
    if names.is_empty() {
        "no groups with irrep profile {1,1,1,3}\n".to_string()
    } else {
        let mut out = String::from("groups with irrep profile {1,1,1,3}:\n");
        for n in names {
            out.push_str(&format!("- {n}\n"));
        }
        out
    }
}

pub fn fusion_triple(t: &CharacterTable, a: usize, b: usize, c: usize, m: u32) -> String {
    format!(
        "multiplicity of {} in {} (x) {} over {}: {m}\n",
        t.irreps[c].name,
        t.irreps[a].name,
        t.irreps[b].name,
        t.group.spec.code()
    )
}

fn components_text(comps: &[(String, u32)]) -> String {
    if comps.is_empty() {
        return "0".to_string();
    }
    comps
        .iter()
        .map(|(n, m)| if *m == 1 { n.clone() } else { format!("{m}.{n}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn fusion_pair(t: &CharacterTable, a: usize, b: usize, comps: &[(String, u32)]) -> String {
    format!(
        "{} (x) {} = {}\n",
        t.irreps[a].name,
        t.irreps[b].name,
        components_text(comps)
    )
}

pub fn fusion_table(t: &CharacterTable, rows: &[(usize, usize, Vec<(String, u32)>)]) -> String {
    let mut out = format!("# fusion table of {}\n\n", t.group.spec.code());
    for (a, b, comps) in rows {
        out.push_str(&format!(
            "- {} (x) {} = {}\n",
            t.irreps[*a].name,
            t.irreps[*b].name,
            components_text(comps)
        ));
    }
    out
}
