use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use hyperdim::coxeter::{root_system, CoxeterType};
use hyperdim::embedding::{
    acyclic_covering, build_embedding, chromatic_number, order_dimension_exact, verify_embedding,
    CoveringStrategy, Dimension, DEFAULT_NODE_BUDGET,
};
use hyperdim::irreducibles::{
    subcritical_direct, subcritical_via_shards, subcritical_with_shards, SubcriticalPair,
};
use hyperdim::rank2::{rank_two_structure, shards};
use hyperdim::zonotope::{
    canonical_arrangement, canonical_base_region, supersolvable_chain, zonotopal_embedding,
};
use hyperdim::{enumerate_regions, Arrangement, Golden, Rational, Scalar};

use crate::document::{AnyArrangement, ArrangementDocument};
use crate::{CliError, Command, Method, Output, Which};

/// Runs `$body` with `$a` bound to the arrangement in its own field.
macro_rules! with_field {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            AnyArrangement::Rational($a) => $body,
            AnyArrangement::Golden($a) => $body,
        }
    };
}

pub(crate) fn dispatch(cmd: &Command, input: Option<&str>) -> Result<Output, CliError> {
    match cmd {
        Command::Gen { kind, n } => gen(*kind, *n),
        Command::Regions { .. } => with_field!(&load(input)?, a => regions(a)),
        Command::Digraph {
            which,
            check_acyclic,
            ..
        } => {
            with_field!(&load(input)?, a => digraph(a, *which, *check_acyclic))
        }
        Command::Shards { .. } => with_field!(&load(input)?, a => shard_list(a)),
        Command::Subcritical { method, .. } => {
            with_field!(&load(input)?, a => subcritical(a, *method))
        }
        Command::Embed { coloring, .. } => {
            let colors = match coloring.as_str() {
                "auto" => None,
                path => Some(read_coloring(Path::new(path))?),
            };
            with_field!(&load(input)?, a => embed(a, colors))
        }
        Command::Chromatic { budget, .. } => with_field!(&load(input)?, a => chromatic(a, *budget)),
        Command::DimOracle { max, .. } => with_field!(&load(input)?, a => dim_oracle(a, *max)),
        Command::Supersolvable { .. } => with_field!(&load(input)?, a => supersolvable(a)),
        Command::Zonotope { .. } => with_field!(&load(input)?, a => zonotope(a)),
    }
}

fn load(input: Option<&str>) -> Result<AnyArrangement, CliError> {
    let text = input.expect("commands reading a document are given its text");
    ArrangementDocument::from_json(text)?.build()
}

fn read_coloring(path: &Path) -> Result<Vec<usize>, CliError> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid coloring file: {e}")))
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn exact<F: Scalar>(v: &[F]) -> Vec<String> {
    v.iter().map(Scalar::to_exact_string).collect()
}

fn pair_json(s: &SubcriticalPair) -> Value {
    json!({ "hyperplane": s.hyperplane, "j": s.j, "m": s.m })
}

fn gen(kind: CoxeterType, n: usize) -> Result<Output, CliError> {
    let doc = if kind.needs_sqrt5() {
        ArrangementDocument::from_arrangement(root_system::<Golden>(kind, n)?.arrangement())
    } else {
        ArrangementDocument::from_arrangement(root_system::<Rational>(kind, n)?.arrangement())
    };
    Ok(Output::ok(doc.to_json()))
}

fn regions<F: Scalar>(a: &Arrangement<F>) -> Result<Output, CliError> {
    let p = enumerate_regions(a)?;
    let seps: Vec<Vec<usize>> = p.regions().iter().map(|r| r.sep.to_vec()).collect();
    Ok(Output::ok(render(
        &json!({ "count": p.len(), "regions": seps }),
    )))
}

fn digraph<F: Scalar>(
    a: &Arrangement<F>,
    which: Which,
    check_acyclic: bool,
) -> Result<Output, CliError> {
    let s = rank_two_structure(a)?;
    let (dot, acyclic) = match which {
        Which::D => (s.d.to_dot("D", None), s.d.is_acyclic()),
        Which::Q => (s.q.to_dot("Q", None), s.q_acyclic),
        Which::G if check_acyclic => {
            return Err(CliError::Input(
                "--check-acyclic needs a digraph (D or Q)".into(),
            ));
        }
        Which::G => (s.g.to_dot("G", None), true),
    };
    Ok(Output {
        stdout: dot,
        success: !check_acyclic || acyclic,
    })
}

fn shard_list<F: Scalar>(a: &Arrangement<F>) -> Result<Output, CliError> {
    let p = enumerate_regions(a)?;
    let list: Vec<Value> = shards(a, &p)?
        .iter()
        .map(|s| {
            let cuts: Vec<Value> = s
                .cuts
                .iter()
                .map(|c| json!({ "sub": c.sub, "basic": c.basic, "positive": c.positive }))
                .collect();
            json!({
                "hyperplane": s.hyperplane,
                "cuts": cuts,
                "witness": exact(&s.witness),
                "upper": s.upper,
                "lower": s.lower,
            })
        })
        .collect();
    Ok(Output::ok(render(&Value::Array(list))))
}

fn subcritical<F: Scalar>(a: &Arrangement<F>, method: Method) -> Result<Output, CliError> {
    let p = enumerate_regions(a)?;
    let direct = || {
        subcritical_direct(&p)
            .iter()
            .map(pair_json)
            .collect::<Vec<_>>()
    };
    match method {
        Method::Direct => Ok(Output::ok(render(&Value::Array(direct())))),
        Method::Shards => {
            let sh = shards(a, &p)?;
            let list: Vec<Value> = subcritical_with_shards(&p, &sh)
                .iter()
                .map(|sp| {
                    let mut v = pair_json(&sp.pair);
                    v["shard"] = json!(sp.shard);
                    v
                })
                .collect();
            Ok(Output::ok(render(&Value::Array(list))))
        }
        Method::Both => {
            let mut d = subcritical_direct(&p);
            let mut s = subcritical_via_shards(&p, &shards(a, &p)?);
            d.sort();
            s.sort();
            let agree = d == s;
            let out = json!({
                "agree": agree,
                "direct": d.iter().map(pair_json).collect::<Vec<_>>(),
                "shards": s.iter().map(pair_json).collect::<Vec<_>>(),
            });
            Ok(Output {
                stdout: render(&out),
                success: agree,
            })
        }
    }
}

fn embed<F: Scalar>(a: &Arrangement<F>, colors: Option<Vec<usize>>) -> Result<Output, CliError> {
    let s = rank_two_structure(a)?;
    let p = enumerate_regions(a)?;
    let (name, strategy) = match colors {
        Some(c) => ("coloring", CoveringStrategy::FromColoring(c)),
        None if s.q_acyclic => {
            let r = chromatic_number(&s.g, DEFAULT_NODE_BUDGET);
            ("chromatic", CoveringStrategy::FromColoring(r.certificate))
        }
        None => ("greedy", CoveringStrategy::Greedy),
    };
    let cov = acyclic_covering(&s, &strategy)?;
    let emb = build_embedding(&s.d, &p, &cov)?;
    let report = verify_embedding(&p, &emb.coords)?;
    let ok = report.is_embedding && report.is_consistent();
    let out = json!({
        "strategy": name,
        "dimension": emb.classes.len(),
        "classes": emb.classes,
        "bounds": emb.bounds,
        "coordinates": emb.coords,
        "report": {
            "is_embedding": report.is_embedding,
            "violated_pair": report.violated_pair,
            "reverses_all_subcritical": report.reverses_all_subcritical,
            "unreversed_subcritical": report.unreversed_subcritical.as_ref().map(pair_json),
            "pairs_checked": report.pairs_checked,
        },
    });
    Ok(Output {
        stdout: render(&out),
        success: ok,
    })
}

fn chromatic<F: Scalar>(a: &Arrangement<F>, budget: u64) -> Result<Output, CliError> {
    let s = rank_two_structure(a)?;
    let r = chromatic_number(&s.g, budget);
    let head = if r.is_exact() {
        format!("chi = {}", r.chi_upper)
    } else {
        format!("chi in [{}, {}]", r.chi_lower, r.chi_upper)
    };
    Ok(Output::ok(format!(
        "{head}\nclique: {:?}\ncertificate: {:?}\nnodes: {}\n",
        r.clique, r.certificate, r.nodes
    )))
}

fn dim_oracle<F: Scalar>(a: &Arrangement<F>, max: usize) -> Result<Output, CliError> {
    let p = enumerate_regions(a)?;
    let line = match order_dimension_exact(&p, max)? {
        Dimension::Exact(d) => format!("dimension = {d}\n"),
        Dimension::Unknown => {
            format!("dimension unknown: no realizer with at most {max} extensions found\n")
        }
    };
    Ok(Output::ok(line))
}

fn supersolvable<F: Scalar>(a: &Arrangement<F>) -> Result<Output, CliError> {
    let Some(chain) = supersolvable_chain(a)? else {
        return Ok(Output::ok("not supersolvable\n".into()));
    };
    let p = enumerate_regions(a)?;
    let r = canonical_base_region(a, &chain)?;
    let out = json!({
        "levels": chain.levels,
        "level_order": chain.level_order,
        "lines": chain.lines.iter().map(|b| exact(b)).collect::<Vec<_>>(),
        "canonical_base_region": { "index": r, "separating_set": p.sep(r).to_vec() },
    });
    Ok(Output::ok(render(&out)))
}

fn zonotope<F: Scalar>(a: &Arrangement<F>) -> Result<Output, CliError> {
    let Some(chain) = supersolvable_chain(a)? else {
        return Err(CliError::Failed("arrangement is not supersolvable".into()));
    };
    let (a, chain) = canonical_arrangement(a, &chain)?;
    let z = zonotopal_embedding(&a, &chain)?;
    let out = json!({
        "base_point": exact(a.base_witness()),
        "scales": exact(&z.scales),
        "scaled_normals": z.scaled_normals.iter().map(|n| exact(n)).collect::<Vec<_>>(),
        "basis": z.basis.iter().map(|b| exact(b)).collect::<Vec<_>>(),
        "verification": {
            "sufficient": z.sufficiency.is_sufficient(),
            "order_preserving": z.sufficiency.order_preserving,
            "pairs_checked": z.pairs_checked,
        },
    });
    Ok(Output::ok(render(&out)))
}
