//! Graph sources: edge-list files and builtin specs.

use std::collections::BTreeMap;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use laglab_core::verify::{build_configuration, ConfigurationSpec, Family};
use laglab_core::RGraph;

fn fields(body: &str) -> Result<(Option<&str>, BTreeMap<&str, u64>)> {
    let mut name = None;
    let mut kv = BTreeMap::new();
    for (k, part) in body.split(',').map(str::trim).filter(|p| !p.is_empty()).enumerate() {
        match part.split_once('=') {
            Some(("name", v)) => name = Some(v.trim()),
            Some((key, v)) => {
                let v = v.trim().parse().with_context(|| format!("`{key}` needs a non-negative integer"))?;
                if kv.insert(key.trim(), v).is_some() {
                    bail!("`{key}` given twice");
                }
            }
            None if k == 0 => name = Some(part),
            None => bail!("expected key=value, found `{part}`"),
        }
    }
    Ok((name, kv))
}

fn take(kv: &mut BTreeMap<&str, u64>, key: &str) -> Option<u64> {
    kv.remove(key)
}

fn need(kv: &mut BTreeMap<&str, u64>, key: &str, spec: &str) -> Result<u64> {
    take(kv, key).ok_or_else(|| anyhow!("`{spec}` needs `{key}=`"))
}

fn no_leftovers(kv: &BTreeMap<&str, u64>, spec: &str) -> Result<()> {
    match kv.keys().next() {
        Some(k) => bail!("`{spec}` does not take `{k}=`"),
        None => Ok(()),
    }
}

fn small<T: TryFrom<u64>>(v: u64, what: &str) -> Result<T> {
    T::try_from(v).map_err(|_| anyhow!("`{what}` = {v} is too large"))
}

/// Resolve a builtin spec (`colex:`, `complete:`, `family:`), `-` for stdin,
/// or an edge-list path.
pub fn load(source: &str, default_r: Option<usize>) -> Result<RGraph> {
    if let Some((kind, body)) = source.split_once(':') {
        match kind {
            "colex" => {
                let (_, mut kv) = fields(body)?;
                let r = take(&mut kv, "r").map(|v| small(v, "r")).transpose()?.or(default_r).unwrap_or(3);
                let m = need(&mut kv, "m", kind)?;
                let n = take(&mut kv, "n");
                no_leftovers(&kv, kind)?;
                if r < 2 {
                    bail!("uniformity r = {r} must be at least 2");
                }
                let g = RGraph::colex(r, m);
                return Ok(match n {
                    Some(n) => g.with_n(small(n, "n")?)?,
                    None => g,
                });
            }
            "complete" => {
                let (_, mut kv) = fields(body)?;
                let r = take(&mut kv, "r").map(|v| small(v, "r")).transpose()?.or(default_r).unwrap_or(3);
                let t = small(need(&mut kv, "t", kind)?, "t")?;
                no_leftovers(&kv, kind)?;
                if r < 2 || (t as usize) < r {
                    bail!("complete graph needs 2 <= r <= t (r = {r}, t = {t})");
                }
                return Ok(RGraph::complete(r, t));
            }
            "family" => {
                let (name, mut kv) = fields(body)?;
                let name = name.ok_or_else(|| anyhow!("`family:` needs a family name"))?;
                let t = small(need(&mut kv, "t", kind)?, "t")?;
                let i = take(&mut kv, "i").map(|v| small(v, "i")).transpose()?;
                let a = take(&mut kv, "a").map(|v| small(v, "a")).transpose()?;
                no_leftovers(&kv, kind)?;
                let spec = ConfigurationSpec::new(t, Family::parse(name, i, a)?);
                return Ok(build_configuration(&spec)?);
            }
            _ => {}
        }
    }
    let (label, text) = if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        ("<stdin>".to_string(), s)
    } else {
        let text = std::fs::read_to_string(source).with_context(|| format!("cannot read `{source}`"))?;
        (source.to_string(), text)
    };
    RGraph::parse_edge_list(&text).map_err(|e| anyhow!("{label}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert_eq!(load("colex:r=3,m=17", None).unwrap(), RGraph::colex(3, 17));
        assert_eq!(load("colex:m=4,n=6", None).unwrap().n(), 6);
        assert_eq!(load("colex:m=3", Some(2)).unwrap().r(), 2);
        assert_eq!(load("complete:r=3,t=5", None).unwrap().m(), 10);
        assert_eq!(load("family:lemma3.5,t=6", None).unwrap().m(), 16);
        assert_eq!(load("family:name=thm1.10,t=7,i=1,a=3", None).unwrap().m(), 32);
    }

    #[test]
    fn malformed_builtins_are_refused() {
        for bad in [
            "colex:r=3",
            "colex:r=3,m=x",
            "complete:r=3,t=5,q=1",
            "complete:r=4,t=3",
            "family:t=7",
            "family:thm1.10,t=7,i=3,a=3",
            "family:nope,t=7,a=3",
            "colex:m=3,m=4",
        ] {
            assert!(load(bad, None).is_err(), "{bad}");
        }
    }
}
