use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde_json::{json, Value};

use altermatic::constructions::{
    blow_up, categorical_product, extend_rep_edge, extend_rep_isolated, kneser, kneser_graph, mycielski_representation,
    mycielskian, product_representation, schrijver, schrijver_paper_representation, stable_kneser, PaperVariant,
};
use altermatic::io::{read_graph, read_hypergraph, read_order, to_json, write_text};
use altermatic::{Graph, Hypergraph, LinearOrder};

use crate::{file_stem, Ctx, EXIT_OK};

/// File inputs for the families built from existing instances.
#[derive(Args)]
pub struct Inputs {
    /// Input graph (JSON or `p <n>` edge list).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Second factor for `product`.
    #[arg(long)]
    with: Option<PathBuf>,
    /// Input hypergraph JSON.
    #[arg(long)]
    hypergraph: Option<PathBuf>,
    /// Second factor for `paper-rep product-rep`.
    #[arg(long)]
    with_hypergraph: Option<PathBuf>,
    /// Ordering JSON; natural order if omitted.
    #[arg(long)]
    order: Option<PathBuf>,
    /// Copy counts for `blowup`, comma separated, one per vertex of `mu`.
    #[arg(long, value_delimiter = ',')]
    r: Vec<usize>,
    /// Vertex order for `blowup`; identity if omitted.
    #[arg(long, value_delimiter = ',')]
    mu: Vec<usize>,
}

impl Inputs {
    fn graph(&self) -> Result<Graph> {
        let path = self.graph.as_ref().context("this family needs --graph")?;
        Ok(read_graph(path)?)
    }

    fn hypergraph(&self) -> Result<(Hypergraph, LinearOrder)> {
        let path = self.hypergraph.as_ref().context("this family needs --hypergraph")?;
        let h = read_hypergraph(path)?;
        let order = match &self.order {
            Some(p) => read_order(p)?,
            None => h.natural_order(),
        };
        Ok((h, order))
    }
}

/// What a construction produced; each present part is also written to its
/// own file under `--out` so it can be fed back to the other verbs.
#[derive(Default)]
struct Built {
    graph: Option<Graph>,
    hypergraph: Option<Hypergraph>,
    order: Option<LinearOrder>,
    extra: Value,
}

impl Built {
    fn rep(graph: Graph, hypergraph: Hypergraph, order: Option<LinearOrder>, extra: Value) -> Self {
        Built { graph: Some(graph), hypergraph: Some(hypergraph), order, extra }
    }
}

fn nums(family: &str, params: &[String], want: usize) -> Result<Vec<u32>> {
    if params.len() != want {
        bail!("{family} takes {want} integer parameter(s), got {}", params.len());
    }
    params.iter().map(|p| p.parse().with_context(|| format!("{family}: {p:?} is not a nonnegative integer"))).collect()
}

pub fn run(ctx: &Ctx, family: &str, params: &[String], inputs: &Inputs) -> Result<u8> {
    let built = match family {
        "kneser" => {
            let p = nums(family, params, 2)?;
            let r = kneser(p[0], p[1])?;
            Built::rep(r.graph, r.hypergraph, None, json!({ "vertex_map": r.vertex_map }))
        }
        "schrijver" => {
            let p = nums(family, params, 2)?;
            let r = schrijver(p[0], p[1])?;
            Built::rep(r.graph, r.hypergraph, None, json!({ "vertex_map": r.vertex_map }))
        }
        "stable-kneser" => {
            let p = nums(family, params, 3)?;
            let r = stable_kneser(p[0], p[1], p[2])?;
            Built::rep(r.graph, r.hypergraph, None, json!({ "vertex_map": r.vertex_map }))
        }
        "mycielski" => {
            nums(family, params, 0)?;
            Built { graph: Some(mycielskian(&inputs.graph()?)), ..Default::default() }
        }
        "blowup" => {
            nums(family, params, 0)?;
            let g = inputs.graph()?;
            let mu: Vec<usize> = if inputs.mu.is_empty() { (0..g.n()).collect() } else { inputs.mu.clone() };
            let b = blow_up(&g, &inputs.r, &mu)?;
            Built { graph: Some(b.graph), extra: json!({ "origin": b.origin }), ..Default::default() }
        }
        "product" => {
            nums(family, params, 0)?;
            let other = read_graph(inputs.with.as_ref().context("product needs --with")?)?;
            Built { graph: Some(categorical_product(&inputs.graph()?, &other)), ..Default::default() }
        }
        "paper-rep" => paper_rep(params, inputs)?,
        _ => bail!(
            "unknown family {family:?}; expected kneser, schrijver, stable-kneser, mycielski, blowup, product or paper-rep"
        ),
    };
    emit(ctx, family, params, inputs, built)?;
    Ok(EXIT_OK)
}

fn paper_rep(params: &[String], inputs: &Inputs) -> Result<Built> {
    let Some((sub, rest)) = params.split_first() else {
        bail!("paper-rep needs a subfamily: sg2, half, mycielski-rep, product-rep, extend-isolated or extend-edge");
    };
    let name = format!("paper-rep {sub}");
    Ok(match sub.as_str() {
        "sg2" | "half" => {
            let n = nums(&name, rest, 1)?[0];
            let variant = match (sub.as_str(), n % 2) {
                ("half", _) => PaperVariant::HalfKneser,
                (_, 0) => PaperVariant::TwoSubsetsEven,
                _ => PaperVariant::TwoSubsetsOdd,
            };
            let (h, order) = schrijver_paper_representation(n, variant)?;
            let r = kneser_graph(&h);
            Built::rep(r.graph, h, Some(order), json!({ "variant": variant }))
        }
        "mycielski-rep" => {
            let t = nums(&name, rest, 1)?[0] as usize;
            let (f, sigma) = inputs.hypergraph()?;
            let r = mycielski_representation(&f, &sigma, t)?;
            let extra = json!({
                "t": r.t,
                "multiplicities": r.multiplicities,
                "labels": r.labels,
                "origin": r.target.origin,
            });
            Built::rep(r.target.graph, r.hypergraph, Some(r.order), extra)
        }
        "product-rep" => {
            nums(&name, rest, 0)?;
            let (g, sigma) = inputs.hypergraph()?;
            let h = read_hypergraph(inputs.with_hypergraph.as_ref().context("product-rep needs --with-hypergraph")?)?;
            let r = product_representation(&g, &h)?;
            let tau = h.natural_order();
            let order = r.order(&sigma, &tau)?;
            Built::rep(r.graph, r.hypergraph, Some(order), json!({ "vertex_map": r.vertex_map, "relabeled": r.relabeled }))
        }
        "extend-isolated" => {
            nums(&name, rest, 0)?;
            let (h, sigma) = inputs.hypergraph()?;
            let (h, order) = extend_rep_isolated(&h, &sigma)?;
            let r = kneser_graph(&h);
            Built::rep(r.graph, h, Some(order), Value::Null)
        }
        "extend-edge" => {
            let p = nums(&name, rest, 2)?;
            let (h, sigma) = inputs.hypergraph()?;
            let rep = kneser_graph(&h).with_order(sigma);
            let e = extend_rep_edge(&rep, p[0] as usize, p[1] as usize)?;
            Built::rep(e.representation.graph, e.hypergraph, Some(e.order), json!({ "steps": e.steps }))
        }
        other => bail!("unknown paper-rep subfamily {other:?}"),
    })
}

fn emit(ctx: &Ctx, family: &str, params: &[String], inputs: &Inputs, built: Built) -> Result<()> {
    let mut value = json!({ "family": family, "params": params });
    if let Some(g) = &built.graph {
        value["graph_vertices"] = json!(g.n());
        value["graph_edges"] = json!(g.edge_count());
    }
    if let Some(h) = &built.hypergraph {
        value["hypergraph_vertices"] = json!(h.vertex_count());
        value["hyperedges"] = json!(h.edge_count());
    }
    if let Some(o) = &built.order {
        value["order"] = json!(o);
    }
    if let Some(h) = &built.hypergraph {
        value["hypergraph"] = json!(h);
    }
    if let Some(g) = &built.graph {
        value["graph"] = json!(g);
    }
    if !built.extra.is_null() {
        value["details"] = built.extra;
    }
    print!("{}", to_json(&value));
    if let Some(dir) = &ctx.out {
        let mut stem = std::iter::once(family.to_string()).chain(params.iter().cloned()).collect::<Vec<_>>().join("-");
        if let Some(p) = inputs.hypergraph.as_ref().or(inputs.graph.as_ref()) {
            stem = format!("{stem}-{}", file_stem(p));
        }
        let dir = dir.join(stem);
        if let Some(g) = &built.graph {
            write_text(&dir.join("graph.json"), &to_json(g))?;
        }
        if let Some(h) = &built.hypergraph {
            write_text(&dir.join("hypergraph.json"), &to_json(h))?;
        }
        if let Some(o) = &built.order {
            write_text(&dir.join("order.json"), &to_json(o))?;
        }
    }
    Ok(())
}
