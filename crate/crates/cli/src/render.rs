//! Text and machine renderings of single constructions.

use std::fmt::Write as _;

use serde_json::{json, Value};

use setdev::abgroup::{devg, GroupHom};
use setdev::chu::{e_space, embed, ex_deviation, morphism_is_valid};
use setdev::finset::{canonical_factorization, classify, deviation, FiniteSet, Mapping};
use setdev::verifier::REPORT_SCHEMA;

fn line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("values serialize");
    s.push('\n');
    s
}

fn compact<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

pub fn dev(f: &Mapping, machine: bool) -> String {
    let d = deviation(f);
    let flags = classify(f);
    let fac = canonical_factorization(f);
    if machine {
        return line(json!({
            "schema": REPORT_SCHEMA,
            "mapping": f,
            "deviation": d,
            "classification": flags,
            "factorization": { "proj": fac.proj, "mid": fac.mid, "incl": fac.incl },
        }));
    }
    let names = flags.names();
    let mut out = String::new();
    let _ = writeln!(out, "mapping    {}", compact(f));
    let _ = writeln!(out, "partition  {}", compact(&d.part));
    let _ = writeln!(out, "missed     {}", compact(&d.missed));
    let _ = writeln!(
        out,
        "flags      {}",
        if names.is_empty() {
            "none".into()
        } else {
            names.join(", ")
        }
    );
    let _ = writeln!(out, "proj       {}", compact(&fac.proj));
    let _ = writeln!(out, "mid        {}", compact(&fac.mid));
    let _ = writeln!(out, "incl       {}", compact(&fac.incl));
    out
}

pub fn factor(f: &Mapping, machine: bool) -> String {
    let fac = canonical_factorization(f);
    if machine {
        return line(json!({
            "schema": REPORT_SCHEMA,
            "mapping": f,
            "proj": fac.proj,
            "mid": fac.mid,
            "incl": fac.incl,
        }));
    }
    let mut out = String::new();
    let blocks = fac.proj.cod();
    let image = fac.incl.dom();
    let _ = writeln!(out, "X -> X_f (surjective)");
    for x in f.dom().elements() {
        let _ = writeln!(out, "  {x} -> {}", blocks.label(fac.proj.apply(x)));
    }
    let _ = writeln!(out, "X_f -> f(X) (bijective)");
    for b in blocks.elements() {
        let _ = writeln!(
            out,
            "  {} -> {}",
            blocks.label(b),
            image.label(fac.mid.apply(b))
        );
    }
    let _ = writeln!(out, "f(X) -> Y (injective)");
    for y in image.elements() {
        let _ = writeln!(out, "  {} -> {}", image.label(y), fac.incl.apply(y));
    }
    out
}

/// The mapping as a bipartite graph; domain points are clustered by kernel
/// block and missed codomain points are dashed.
pub fn dot(f: &Mapping) -> String {
    let d = deviation(f);
    let mut out = String::from("digraph mapping {\n  rankdir=LR;\n");
    for (i, block) in d.part.blocks().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_block{i} {{");
        let _ = writeln!(
            out,
            "    label=\"{}\";",
            compact(block).replace('"', "\\\"")
        );
        for x in block {
            let _ = writeln!(out, "    x{x} [label=\"{x}\"];");
        }
        out.push_str("  }\n");
    }
    for y in f.cod().elements() {
        let style = if d.missed.contains(y) {
            ", style=dashed"
        } else {
            ""
        };
        let _ = writeln!(out, "  y{y} [label=\"{y}\", shape=box{style}];");
    }
    for x in f.dom().elements() {
        let _ = writeln!(out, "  x{x} -> y{};", f.apply(x));
    }
    out.push_str("}\n");
    out
}

pub fn group(h: &GroupHom, machine: bool) -> String {
    let d = devg(h);
    let injective = d.first == *h.dom();
    let surjective = d.second.is_trivial();
    if machine {
        return line(json!({
            "schema": REPORT_SCHEMA,
            "hom": h,
            "devg": d,
            "isomorphism": injective && surjective,
            "injective": injective,
            "surjective": surjective,
        }));
    }
    let mut flags = Vec::new();
    if injective && surjective {
        flags.push("isomorphism");
    }
    if injective {
        flags.push("injective");
    }
    if surjective {
        flags.push("surjective");
    }
    let mut out = String::new();
    let _ = writeln!(out, "hom    {}", compact(h));
    let _ = writeln!(out, "devg1  {}  {}", compact(&d.first), d.first);
    let _ = writeln!(out, "devg2  {}  {}", compact(&d.second), d.second);
    let _ = writeln!(
        out,
        "flags  {}",
        if flags.is_empty() {
            "none".into()
        } else {
            flags.join(", ")
        }
    );
    out
}

pub fn chu_embedding(f: &Mapping, machine: bool) -> setdev::Result<String> {
    let m = embed(f)?;
    let (ex, ey) = (e_space(f.dom())?, e_space(f.cod())?);
    let valid = morphism_is_valid(&m, &ex, &ey)?;
    if machine {
        return Ok(line(json!({
            "schema": REPORT_SCHEMA,
            "mapping": f,
            "morphism": m,
            "valid": valid,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "forward   {}", compact(&m.forward));
    let _ = writeln!(out, "backward  f^-1: P(Y) -> P(X)");
    let nx = f.dom().size();
    let ny = f.cod().size();
    for b in 0..m.backward.dom().size() {
        let u = setdev::finset::Subset::from_mask(ny, b as u64);
        let a = setdev::finset::Subset::from_mask(nx, m.backward.apply(b) as u64);
        let _ = writeln!(out, "  {} -> {}", compact(&u), compact(&a));
    }
    let _ = writeln!(out, "valid     {valid}");
    Ok(out)
}

pub fn e_deviation(x: &FiniteSet, machine: bool) -> setdev::Result<String> {
    let d = ex_deviation(x)?;
    let width = 1usize << x.size();
    let pairs = |block: &[usize]| -> Vec<Value> {
        block
            .iter()
            .map(|&k| {
                json!([
                    k / width,
                    setdev::finset::Subset::from_mask(x.size(), (k % width) as u64)
                ])
            })
            .collect()
    };
    if machine {
        return Ok(line(json!({
            "schema": REPORT_SCHEMA,
            "size": x.size(),
            "deviation": d,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "missed  {}", compact(&d.missed));
    for (i, block) in d.part.blocks().iter().enumerate() {
        let _ = writeln!(
            out,
            "block {i} ({} pairs)  {}",
            block.len(),
            compact(&pairs(block))
        );
    }
    Ok(out)
}
