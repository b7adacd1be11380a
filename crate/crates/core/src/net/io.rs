//! JSON form of a net.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Net, VertexKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexTypeJson {
    A0,
    A1,
    A2,
    A3,
    Lateral,
    Interior,
}

/// Serialised net. Colours are circle indices 1..4, `opp` is -1 on the
/// boundary, `vertex` gives the origin vertex of every dart and
/// `vertex_type` is indexed by vertex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NetJson {
    pub darts: usize,
    pub next: Vec<usize>,
    pub opp: Vec<i64>,
    pub color: Vec<usize>,
    #[serde(default)]
    pub vertex: Vec<usize>,
    #[serde(default)]
    pub vertex_type: Vec<VertexTypeJson>,
    pub corner_labels: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pdart: Vec<usize>,
}

impl From<&Net> for NetJson {
    fn from(net: &Net) -> NetJson {
        let (vid, _) = net.vertex_ids();
        let vertex_type = net
            .vertex_kinds()
            .into_iter()
            .map(|k| match k {
                VertexKind::Corner(0) => VertexTypeJson::A0,
                VertexKind::Corner(1) => VertexTypeJson::A1,
                VertexKind::Corner(2) => VertexTypeJson::A2,
                VertexKind::Corner(_) => VertexTypeJson::A3,
                VertexKind::Lateral => VertexTypeJson::Lateral,
                VertexKind::Interior => VertexTypeJson::Interior,
            })
            .collect();
        NetJson {
            darts: net.dart_count(),
            next: net.next.clone(),
            opp: net.opp.iter().map(|o| o.map_or(-1, |d| d as i64)).collect(),
            color: net.colour.iter().map(|c| c + 1).collect(),
            vertex: vid,
            vertex_type,
            corner_labels: (0..4).map(|j| (format!("a{j}"), net.corners[j])).collect(),
            pdart: net.pdart.clone(),
        }
    }
}

impl NetJson {
    pub fn into_net(self) -> Result<Net> {
        if self.next.len() != self.darts {
            return Err(Error::InvalidNet("`darts` does not match `next`".into()));
        }
        let opp = self
            .opp
            .iter()
            .map(|&o| if o < 0 { Ok(None) } else { usize::try_from(o).map(Some) })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidNet("bad opp entry".into()))?;
        if self.color.iter().any(|&c| !(1..=4).contains(&c)) {
            return Err(Error::InvalidNet("colours must be 1..4".into()));
        }
        let colour = self.color.iter().map(|c| c - 1).collect();
        let mut corners = [0; 4];
        for (j, c) in corners.iter_mut().enumerate() {
            *c = *self
                .corner_labels
                .get(&format!("a{j}"))
                .ok_or_else(|| Error::InvalidNet(format!("missing corner label a{j}")))?;
        }
        let net = Net::from_parts(self.next, opp, colour, self.pdart, corners)?;
        Ok(net)
    }
}

impl Net {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(NetJson::from(self)).expect("net serialises")
    }

    pub fn from_json_str(s: &str) -> Result<Net> {
        let j: NetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.into_net()
    }
}
