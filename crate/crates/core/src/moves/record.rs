//! Move records and their replayable line-oriented log.
//!
//! ```text
//! rho-switch color=0 e=0,1 f=4,5 involved=4 variant=canonical pairing=B rule=bipartition m=1 order=16 fp=1f0c…
//! dipole-cancel u=3 v=7 colors=0,1,2 order=14 fp=…
//! dipole-insert colors=4 attach=0:3:5,1:2:6,2:2:9,3:2:4 order=18 fp=…
//! connected-sum v1=0 operand=rp4.gem v2=0 order=30 fp=…
//! ```
//!
//! `fp` is a prefix of the SHA-256 digest of the serialized graph after the
//! move. Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::color::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::format::serialize;
use crate::graph::ColoredGraph;

use super::consum::connected_sum;
use super::dipole::{cancel_dipole, dipole_at, insert_dipole, Attachment};
use super::rho::{rho_pair_at, switch_rho_pair, Pairing, SwitchRule, SwitchVariant};

/// Hex prefix of the SHA-256 digest of the canonical serialization.
pub fn graph_fingerprint(g: &ColoredGraph) -> String {
    let digest = Sha256::digest(serialize(g).as_bytes());
    hex::encode(&digest[..8])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MoveKind {
    RhoSwitch {
        color: Color,
        e: (usize, usize),
        f: (usize, usize),
        involved: ColorSet,
        variant: SwitchVariant,
        pairing: Pairing,
        rule: SwitchRule,
    },
    DipoleCancel {
        u: usize,
        v: usize,
        colors: ColorSet,
    },
    DipoleInsert {
        colors: ColorSet,
        attachments: Vec<Attachment>,
    },
    ConnectedSum {
        v1: usize,
        operand: String,
        v2: usize,
    },
}

/// One move with the order and fingerprint of the resulting graph. `m` is
/// the running number of ρ-switches in a pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRecord {
    #[serde(flatten)]
    pub kind: MoveKind,
    pub m: Option<usize>,
    pub order: usize,
    pub fingerprint: String,
}

impl MoveRecord {
    pub fn new(kind: MoveKind, result: &ColoredGraph, m: Option<usize>) -> Self {
        MoveRecord { kind, m, order: result.order(), fingerprint: graph_fingerprint(result) }
    }
}

fn colors_str(cs: ColorSet) -> String {
    if cs.is_empty() {
        return "-".into();
    }
    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MoveKind::RhoSwitch { color, e, f: ff, involved, variant, pairing, rule } => write!(
                f,
                "rho-switch color={color} e={},{} f={},{} involved={} variant={variant} pairing={pairing} rule={rule}",
                e.0,
                e.1,
                ff.0,
                ff.1,
                colors_str(*involved)
            )?,
            MoveKind::DipoleCancel { u, v, colors } => {
                write!(f, "dipole-cancel u={u} v={v} colors={}", colors_str(*colors))?
            }
            MoveKind::DipoleInsert { colors, attachments } => {
                let att: Vec<String> = attachments.iter().map(|a| format!("{}:{}:{}", a.color, a.x, a.y)).collect();
                write!(f, "dipole-insert colors={} attach={}", colors_str(*colors), att.join(","))?
            }
            MoveKind::ConnectedSum { v1, operand, v2 } => write!(f, "connected-sum v1={v1} operand={operand} v2={v2}")?,
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        write!(f, " order={} fp={}", self.order, self.fingerprint)
    }
}

fn parse_colors(s: &str) -> Result<ColorSet, String> {
    if s == "-" {
        return Ok(ColorSet::EMPTY);
    }
    s.split(',')
        .map(|t| t.parse::<Color>().map_err(|_| format!("bad color `{t}`")))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| v.into_iter().collect())
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("bad edge `{s}`"))?;
    Ok((a.parse().map_err(|_| format!("bad vertex `{a}`"))?, b.parse().map_err(|_| format!("bad vertex `{b}`"))?))
}

struct Fields<'a>(BTreeMap<&'a str, &'a str>);

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Result<&'a str, String> {
        self.0.get(key).copied().ok_or_else(|| format!("missing field `{key}`"))
    }

    fn num(&self, key: &str) -> Result<usize, String> {
        let v = self.get(key)?;
        v.parse().map_err(|_| format!("field `{key}`: bad number `{v}`"))
    }
}

impl std::str::FromStr for MoveRecord {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, String> {
        let mut toks = line.split_whitespace();
        let kind = toks.next().ok_or("empty line")?;
        let mut map = BTreeMap::new();
        for t in toks {
            let (k, v) = t.split_once('=').ok_or_else(|| format!("expected key=value, found `{t}`"))?;
            map.insert(k, v);
        }
        let fields = Fields(map);
        let kind = match kind {
            "rho-switch" => MoveKind::RhoSwitch {
                color: fields.num("color")?,
                e: parse_edge(fields.get("e")?)?,
                f: parse_edge(fields.get("f")?)?,
                involved: parse_colors(fields.get("involved")?)?,
                variant: fields.get("variant")?.parse()?,
                pairing: match fields.get("pairing")? {
                    "A" => Pairing::A,
                    "B" => Pairing::B,
                    other => return Err(format!("bad pairing `{other}`")),
                },
                rule: fields.get("rule")?.parse()?,
            },
            "dipole-cancel" => MoveKind::DipoleCancel {
                u: fields.num("u")?,
                v: fields.num("v")?,
                colors: parse_colors(fields.get("colors")?)?,
            },
            "dipole-insert" => {
                let att = fields.get("attach")?;
                let attachments = if att.is_empty() {
                    Vec::new()
                } else {
                    att.split(',')
                        .map(|a| {
                            let parts: Vec<&str> = a.split(':').collect();
                            let nums: Vec<usize> = parts
                                .iter()
                                .map(|p| p.parse().map_err(|_| format!("bad attachment `{a}`")))
                                .collect::<Result<_, _>>()?;
                            match nums[..] {
                                [color, x, y] => Ok(Attachment { color, x, y }),
                                _ => Err(format!("bad attachment `{a}`")),
                            }
                        })
                        .collect::<Result<_, String>>()?
                };
                MoveKind::DipoleInsert { colors: parse_colors(fields.get("colors")?)?, attachments }
            }
            "connected-sum" => MoveKind::ConnectedSum {
                v1: fields.num("v1")?,
                operand: fields.get("operand")?.to_string(),
                v2: fields.num("v2")?,
            },
            other => return Err(format!("unknown move `{other}`")),
        };
        let m = match fields.0.get("m") {
            Some(_) => Some(fields.num("m")?),
            None => None,
        };
        Ok(MoveRecord { kind, m, order: fields.num("order")?, fingerprint: fields.get("fp")?.to_string() })
    }
}

/// Applies one recorded move to `g`, checking that the recorded parameters
/// still describe `g`. `resolve` loads connected-sum operands by name.
pub fn apply_move(
    g: &ColoredGraph,
    kind: &MoveKind,
    resolve: &dyn Fn(&str) -> Result<ColoredGraph>,
) -> Result<ColoredGraph> {
    match kind {
        MoveKind::RhoSwitch { color, e, f, involved, variant, pairing, rule } => {
            let p = rho_pair_at(g, *color, e.0, f.0)?;
            if p.e != *e || p.f != *f || p.involved != *involved {
                return Err(Error::InvalidPair(format!(
                    "recorded pair ({},{}),({},{}) involving {involved} does not match the graph",
                    e.0, e.1, f.0, f.1
                )));
            }
            let r = switch_rho_pair(g, &p, *variant)?;
            if r.pairing != *pairing || r.rule != *rule {
                return Err(Error::InvalidPair(format!(
                    "switch chose pairing {} by rule {}, log says {pairing} by {rule}",
                    r.pairing, r.rule
                )));
            }
            Ok(r.graph)
        }
        MoveKind::DipoleCancel { u, v, colors } => {
            let d = dipole_at(g, *u, *v)?;
            if d.colors != *colors {
                return Err(Error::InvalidDipole(format!("({u},{v}) is joined by colors {}, not {colors}", d.colors)));
            }
            cancel_dipole(g, &d)
        }
        MoveKind::DipoleInsert { colors, attachments } => Ok(insert_dipole(g, *colors, attachments)?.0),
        MoveKind::ConnectedSum { v1, operand, v2 } => connected_sum(g, *v1, &resolve(operand)?, *v2),
    }
}

/// Replays a move log from `start`, verifying the order and fingerprint
/// after every line. Returns every intermediate graph, `start` first.
pub fn replay(
    start: &ColoredGraph,
    log: &str,
    resolve: &dyn Fn(&str) -> Result<ColoredGraph>,
) -> Result<Vec<ColoredGraph>> {
    let mut graphs = vec![start.clone()];
    for (idx, raw) in log.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let rec: MoveRecord = text.parse().map_err(|detail| Error::Replay { line, detail })?;
        let next = apply_move(graphs.last().unwrap(), &rec.kind, resolve)
            .map_err(|e| Error::Replay { line, detail: e.to_string() })?;
        if next.order() != rec.order || graph_fingerprint(&next) != rec.fingerprint {
            return Err(Error::Replay {
                line,
                detail: format!(
                    "result (order {}, fp {}) differs from the log (order {}, fp {})",
                    next.order(),
                    graph_fingerprint(&next),
                    rec.order,
                    rec.fingerprint
                ),
            });
        }
        graphs.push(next);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_lines_round_trip() {
        let g = ColoredGraph::order_two(4);
        let recs = [
            MoveRecord::new(
                MoveKind::RhoSwitch {
                    color: 1,
                    e: (0, 1),
                    f: (2, 3),
                    involved: ColorSet::singleton(4),
                    variant: SwitchVariant::Canonical,
                    pairing: Pairing::B,
                    rule: SwitchRule::Bipartition,
                },
                &g,
                Some(1),
            ),
            MoveRecord::new(MoveKind::DipoleCancel { u: 0, v: 3, colors: ColorSet::EMPTY }, &g, None),
            MoveRecord::new(
                MoveKind::DipoleInsert {
                    colors: ColorSet::singleton(4),
                    attachments: vec![Attachment { color: 0, x: 1, y: 0 }],
                },
                &g,
                None,
            ),
            MoveRecord::new(MoveKind::ConnectedSum { v1: 0, operand: "s4.gem".into(), v2: 1 }, &g, None),
        ];
        for r in recs {
            let line = r.to_string();
            assert_eq!(line.parse::<MoveRecord>().unwrap(), r, "{line}");
        }
        assert_eq!(graph_fingerprint(&g).len(), 16);
    }

    #[test]
    fn replay_insert_and_cancel() {
        let g = ColoredGraph::order_two(4);
        let cs: ColorSet = [0, 1, 2].into_iter().collect();
        let att = vec![Attachment { color: 3, x: 0, y: 1 }, Attachment { color: 4, x: 0, y: 1 }];
        let (h, d) = insert_dipole(&g, cs, &att).unwrap();
        let back = cancel_dipole(&h, &d).unwrap();
        let log = format!(
            "# demo\n{}\n{}\n",
            MoveRecord::new(MoveKind::DipoleInsert { colors: cs, attachments: att }, &h, None),
            MoveRecord::new(MoveKind::DipoleCancel { u: d.u, v: d.v, colors: cs }, &back, None)
        );
        let none = |_: &str| -> Result<ColoredGraph> { Err(Error::InvalidInput("no operands".into())) };
        let graphs = replay(&g, &log, &none).unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[2], g);
        let tampered = log.replace("order=4", "order=6");
        assert!(matches!(replay(&g, &tampered, &none), Err(Error::Replay { line: 2, .. })));
    }
}
