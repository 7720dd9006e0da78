//! Runs a reduction over a generated corpus and compares both sides with
//! independent deciders.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{edp_corpus, positive_qnae_corpus, qbf_corpus};
use crate::edp::edp_solve;
use crate::error::Result;
use crate::graph::{clique, cycle, Graph};
use crate::hom::{hom_exists, HomMode};
use crate::quantified::{qbf_eval, qcsp_eval, qnae_eval};
use crate::reductions::{
    c5_chain_reduce, local_hom_subdivision_pair, reduce_3col_by_subdivision, reduce_edp_to_long_edp,
    reduce_pik_qnae_to_list_qcsp, reduce_qbf_to_qcsp,
};
use crate::subgraph::{all_graphs_up_to, connected_graphs_up_to};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Suite {
    /// QBF → QNAE → QCSP(K3) over [`qbf_corpus`].
    QbfToQcsp {
        max_vars: usize,
        max_clauses: usize,
        max_width: usize,
    },
    /// 3-colouring versus `C_{3·5^r}` over connected graphs.
    ThreeColSubdivision { max_n: usize, r: u32 },
    /// `C5` colouring versus its chain image over all graphs.
    C5Chain { max_n: usize },
    /// Local homomorphisms to `K4` versus their `r`-subdivisions over connected
    /// subcubic graphs.
    LocalHom { max_n: usize, r: usize, mode: HomMode },
    /// Positive NAE instances versus their list gadget images.
    ListGadget {
        max_vars: usize,
        max_triples: usize,
        p: usize,
    },
    /// Classic EDP versus its long image.
    EdpToLongEdp { max_n: usize, max_pairs: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeStats {
    pub instances: usize,
    /// Largest source and image, in vertices (graphs) or variables (formulas).
    pub max_source_size: usize,
    pub max_image_size: usize,
    pub yes_instances: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub suite: Suite,
    pub input_summary: String,
    pub output_summary: String,
    pub size_stats: SizeStats,
    pub equivalence_checked: bool,
    pub agrees: bool,
    /// Up to ten disagreeing instances, rendered.
    pub disagreements: Vec<String>,
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {}", self.input_summary)?;
        writeln!(f, "output: {}", self.output_summary)?;
        writeln!(
            f,
            "instances={} yes={} max_source={} max_image={}",
            self.size_stats.instances,
            self.size_stats.yes_instances,
            self.size_stats.max_source_size,
            self.size_stats.max_image_size
        )?;
        write!(f, "agrees={}", self.agrees)?;
        for d in &self.disagreements {
            write!(f, "\ndisagreement: {d}")?;
        }
        Ok(())
    }
}

struct Tally {
    stats: SizeStats,
    disagreements: Vec<String>,
    mismatches: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            stats: SizeStats {
                instances: 0,
                max_source_size: 0,
                max_image_size: 0,
                yes_instances: 0,
            },
            disagreements: Vec::new(),
            mismatches: 0,
        }
    }

    fn record(&mut self, source_size: usize, image_size: usize, source: bool, image: bool, show: impl FnOnce() -> String) {
        self.stats.instances += 1;
        self.stats.max_source_size = self.stats.max_source_size.max(source_size);
        self.stats.max_image_size = self.stats.max_image_size.max(image_size);
        self.stats.yes_instances += usize::from(source);
        if source != image {
            self.mismatches += 1;
            if self.disagreements.len() < 10 {
                self.disagreements.push(format!("{} (source {source}, image {image})", show()));
            }
        }
    }

    fn report(self, suite: Suite, input_summary: String, output_summary: String) -> ReductionReport {
        ReductionReport {
            suite,
            input_summary,
            output_summary,
            size_stats: self.stats,
            equivalence_checked: true,
            agrees: self.mismatches == 0,
            disagreements: self.disagreements,
        }
    }
}

fn hom(g: &Graph, h: &Graph, mode: HomMode) -> Result<bool> {
    Ok(hom_exists(g, h, mode)?.is_some())
}

pub fn verify_reduction(suite: Suite) -> Result<ReductionReport> {
    let mut tally = Tally::new();
    let (input, output) = match suite {
        Suite::QbfToQcsp {
            max_vars,
            max_clauses,
            max_width,
        } => {
            for f in qbf_corpus(max_vars, max_clauses, max_width) {
                let (qnae, image) = reduce_qbf_to_qcsp(&f)?;
                let truth = qbf_eval(&f)?;
                let middle = qnae_eval(&qnae.instance)?;
                let end = qcsp_eval(&image.instance)?;
                let consistent = if middle == truth { end } else { !truth };
                tally.record(f.var_count(), image.graph.vertex_count(), truth, consistent, || f.to_string());
            }
            (
                format!("QBF, ≤{max_vars} variables, ≤{max_clauses} clauses of width ≤{max_width}"),
                "QCSP(K3) via quantified NAE".to_string(),
            )
        }
        Suite::ThreeColSubdivision { max_n, r } => {
            for g in connected_graphs_up_to(max_n) {
                let out = reduce_3col_by_subdivision(&g, r)?;
                let source = hom(&out.source, &clique(3), HomMode::Plain)?;
                let image = hom(&out.graph, &out.target, HomMode::Plain)?;
                tally.record(g.vertex_count(), out.graph.vertex_count(), source, image, || g.to_string());
            }
            (
                format!("connected graphs with ≤{max_n} vertices, triangle-augmented, into K3"),
                format!("{}-subdivisions into C{}", 5usize.pow(r) - 1, 3 * 5usize.pow(r)),
            )
        }
        Suite::C5Chain { max_n } => {
            let c5 = cycle(5);
            for g in all_graphs_up_to(max_n) {
                let out = c5_chain_reduce(&g);
                let source = hom(&g, &c5, HomMode::Plain)?;
                let image = hom(&out, &c5, HomMode::Plain)? && out.is_subcubic();
                tally.record(g.vertex_count(), out.vertex_count(), source, image, || g.to_string());
            }
            (format!("graphs with ≤{max_n} vertices into C5"), "subcubic chain images into C5".to_string())
        }
        Suite::LocalHom { max_n, r, mode } => {
            let k4 = clique(4);
            for g in connected_graphs_up_to(max_n).into_iter().filter(Graph::is_subcubic) {
                let (gr, k4r) = local_hom_subdivision_pair(&g, r)?;
                let source = hom(&g, &k4, mode)?;
                let image = hom(&gr, &k4r, mode)?;
                tally.record(g.vertex_count(), gr.vertex_count(), source, image, || g.to_string());
            }
            (
                format!("connected subcubic graphs with ≤{max_n} vertices, {mode:?} into K4"),
                format!("{r}-subdivisions into K4^{r}"),
            )
        }
        Suite::ListGadget { max_vars, max_triples, p } => {
            for inst in positive_qnae_corpus(max_vars, max_triples) {
                let image = reduce_pik_qnae_to_list_qcsp(&inst, p)?;
                let source = qnae_eval(&inst)?;
                let target = qcsp_eval(&image.instance)? && image.graph.is_subcubic();
                tally.record(inst.var_count(), image.graph.vertex_count(), source, target, || inst.to_string());
            }
            (
                format!("positive quantified NAE, ≤{max_vars} variables, ≤{max_triples} triples"),
                format!("QCSP(K3, {{1,2}}, {{1,3}}) gadget graphs, paths of length {}", 2 * p + 1),
            )
        }
        Suite::EdpToLongEdp { max_n, max_pairs } => {
            for inst in edp_corpus(max_n, max_pairs) {
                let long = reduce_edp_to_long_edp(&inst)?;
                let source = edp_solve(&inst)?.is_some();
                let image = edp_solve(&long)?.is_some();
                tally.record(inst.graph.vertex_count(), long.graph.vertex_count(), source, image, || {
                    format!("{:?} on {}", inst.pairs, inst.graph)
                });
            }
            (
                format!("classic EDP, ≤{max_n} vertices, ≤{max_pairs} pairs"),
                "long EDP on k-subdivisions".to_string(),
            )
        }
    };
    Ok(tally.report(suite, input, output))
}
