//! File formats: embedding JSON and DOT export.
//!
//! The embedding JSON object is `{"n": <int>, "rotation": [[...], ...]}`
//! where row `v` lists the neighbors of `v` in counterclockwise order. The
//! same file doubles as an adjacency-list format when the order is ignored.

use crate::embedding::PlaneGraph;
use crate::graph::AbstractGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertex {vertex} position {position}: neighbor {neighbor} out of range (n = {n})")]
    NeighborOutOfRange {
        vertex: usize,
        position: usize,
        neighbor: usize,
        n: usize,
    },
    #[error("vertex {vertex} position {position}: loop")]
    LoopEdge { vertex: usize, position: usize },
    #[error("vertex {vertex} position {position}: duplicate neighbor {neighbor}")]
    DuplicateNeighbor {
        vertex: usize,
        position: usize,
        neighbor: usize,
    },
    #[error("vertex {vertex}: lists neighbor {neighbor}, which does not list it back")]
    Asymmetric { vertex: usize, neighbor: usize },
    #[error("rotation table has {got} rows, header says n = {n}")]
    RowCount { got: usize, n: usize },
    #[error(transparent)]
    Embedding(#[from] crate::embedding::EmbeddingError),
}

#[derive(Debug, Serialize, Deserialize)]
struct EmbeddingFile {
    n: usize,
    rotation: Vec<Vec<usize>>,
}

fn validate(file: &EmbeddingFile) -> Result<(), IoError> {
    let n = file.n;
    if file.rotation.len() != n {
        return Err(IoError::RowCount {
            got: file.rotation.len(),
            n,
        });
    }
    for (vertex, row) in file.rotation.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for (position, &neighbor) in row.iter().enumerate() {
            if neighbor >= n {
                return Err(IoError::NeighborOutOfRange {
                    vertex,
                    position,
                    neighbor,
                    n,
                });
            }
            if neighbor == vertex {
                return Err(IoError::LoopEdge { vertex, position });
            }
            if !seen.insert(neighbor) {
                return Err(IoError::DuplicateNeighbor {
                    vertex,
                    position,
                    neighbor,
                });
            }
        }
    }
    for (vertex, row) in file.rotation.iter().enumerate() {
        for &neighbor in row {
            if !file.rotation[neighbor].contains(&vertex) {
                return Err(IoError::Asymmetric { vertex, neighbor });
            }
        }
    }
    Ok(())
}

/// Reads an embedding JSON file as a plane graph.
pub fn read_embedding_json(text: &str) -> Result<PlaneGraph, IoError> {
    let file: EmbeddingFile = serde_json::from_str(text)?;
    validate(&file)?;
    let graph = AbstractGraph::from_adjacency(file.rotation.clone())
        .expect("validated rotation is a symmetric loop-free adjacency");
    Ok(PlaneGraph::new(graph, file.rotation)?)
}

/// Reads the same format ignoring the cyclic order.
pub fn read_adjacency_json(text: &str) -> Result<AbstractGraph, IoError> {
    let file: EmbeddingFile = serde_json::from_str(text)?;
    validate(&file)?;
    Ok(AbstractGraph::from_adjacency(file.rotation)
        .expect("validated rotation is a symmetric loop-free adjacency"))
}

pub fn write_embedding_json(pg: &PlaneGraph) -> String {
    let file = EmbeddingFile {
        n: pg.n(),
        rotation: pg.rotation().to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("embedding serializes")
}

pub fn write_adjacency_json(g: &AbstractGraph) -> String {
    let file = EmbeddingFile {
        n: g.n(),
        rotation: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("adjacency serializes")
}

/// DOT output for external rendering. Isolated vertices are listed bare.
pub fn write_dot(g: &AbstractGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
