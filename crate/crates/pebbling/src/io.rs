//! JSON file formats.
//!
//! | kind          | shape                                            |
//! |---------------|--------------------------------------------------|
//! | graph         | `{"n": 3, "edges": [[0, 1], [1, 2]]}`            |
//! | configuration | `{"pebbles": [6, 0, 0]}`                         |
//! | certificate   | `{"moves": [[0, 1, 2], [1, 2, 1]]}`              |
//! | X4C instance  | `{"ground_set_size": 8, "sets": [[0, 1, 2, 3]]}` |
//!
//! Unknown fields are rejected.

use std::fs;
use std::path::{Path, PathBuf};

use pebbling_core::reduction::X4CInstance;
use pebbling_core::{Configuration, Graph, GraphError, MoveCertificate};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.n, &edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub pebbles: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub moves: Vec<[u64; 3]>,
}

impl CertificateFile {
    pub fn from_certificate(m: &MoveCertificate) -> Self {
        CertificateFile {
            moves: m.iter().map(|(i, j, k)| [i as u64, j as u64, k]).collect(),
        }
    }

    /// Repeated `(i, j)` entries add up.
    pub fn to_certificate(&self) -> MoveCertificate {
        self.moves
            .iter()
            .map(|m| (m[0] as usize, m[1] as usize, m[2]))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub ground_set_size: usize,
    pub sets: Vec<Vec<usize>>,
}

impl From<InstanceFile> for X4CInstance {
    fn from(f: InstanceFile) -> Self {
        X4CInstance::new(f.ground_set_size, f.sets)
    }
}

impl From<&X4CInstance> for InstanceFile {
    fn from(x: &X4CInstance) -> Self {
        InstanceFile {
            ground_set_size: x.ground_set_size,
            sets: x.sets.clone(),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: path.to_owned(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let mut text = serde_json::to_string(value).expect("plain data serializes");
    text.push('\n');
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    read_json::<GraphFile>(path)?
        .to_graph()
        .map_err(|source| FormatError::Graph {
            path: path.to_owned(),
            source,
        })
}

pub fn read_config(path: &Path) -> Result<Configuration, FormatError> {
    Configuration::new(read_json::<ConfigFile>(path)?.pebbles).map_err(|source| {
        FormatError::Graph {
            path: path.to_owned(),
            source,
        }
    })
}

pub fn read_certificate(path: &Path) -> Result<MoveCertificate, FormatError> {
    Ok(read_json::<CertificateFile>(path)?.to_certificate())
}

pub fn read_instance(path: &Path) -> Result<X4CInstance, FormatError> {
    Ok(read_json::<InstanceFile>(path)?.into())
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<(), FormatError> {
    write_json(path, &GraphFile::from_graph(g))
}

pub fn write_config(path: &Path, c: &Configuration) -> Result<(), FormatError> {
    write_json(
        path,
        &ConfigFile {
            pebbles: c.pebbles().to_vec(),
        },
    )
}

pub fn write_certificate(path: &Path, m: &MoveCertificate) -> Result<(), FormatError> {
    write_json(path, &CertificateFile::from_certificate(m))
}
