//! Trisection-genus bounds from Kirby diagrams of closed orientable
//! 4-manifolds.
//!
//! A diagram with crossing number `s` and `c` connected components gives
//! `g_T ≤ s + c`. Without dotted components it also gives
//! `g_T ≤ m_α + c − 1`, where `m_α` counts the α-colored regions of a
//! chessboard coloring. For connected diagrams these read `s + 1` and `m_α`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KirbyBoundInput {
    pub s: u64,
    pub c: u64,
    pub m_alpha: Option<u64>,
    pub has_dotted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KirbyBound {
    pub formula: &'static str,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KirbyBounds {
    pub bounds: Vec<KirbyBound>,
    pub best: u64,
    pub warnings: Vec<String>,
}

pub fn kirby_bounds(input: &KirbyBoundInput) -> Result<KirbyBounds> {
    if input.c == 0 {
        return Err(Error::InvalidInput("a diagram has at least one component".into()));
    }
    if input.m_alpha == Some(0) {
        return Err(Error::InvalidInput("m_alpha must be at least 1".into()));
    }
    let connected = input.c == 1;
    let mut bounds = vec![KirbyBound { formula: if connected { "s+1" } else { "s+c" }, value: input.s + input.c }];
    let mut warnings = Vec::new();
    match (input.m_alpha, input.has_dotted) {
        (Some(m), false) => bounds.push(KirbyBound {
            formula: if connected { "m_alpha" } else { "m_alpha+c-1" },
            value: m + input.c - 1,
        }),
        (Some(_), true) => {
            warnings.push("m_alpha ignored: the region bound needs a diagram without dotted components".into())
        }
        (None, _) => {}
    }
    let best = bounds.iter().map(|b| b.value).min().unwrap();
    Ok(KirbyBounds { bounds, best, warnings })
}
