use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::LabeledDiagram;

/// Serialized diagram. Field order is the document's key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub concepts: Vec<JsonConcept>,
    pub edges: Vec<[usize; 2]>,
    pub dimension: usize,
    pub realizer: Vec<Vec<usize>>,
    pub crossings: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonConcept {
    pub index: usize,
    pub extent: Vec<String>,
    pub intent: Vec<String>,
    pub x: f64,
    pub y: f64,
    pub object_labels: Vec<String>,
    pub attribute_labels: Vec<String>,
}

impl DiagramJson {
    pub fn new<T: Scalar>(d: &LabeledDiagram<T>) -> Self {
        let concepts = d
            .layout
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| JsonConcept {
                index: i,
                extent: d.extents[i].clone(),
                intent: d.intents[i].clone(),
                x: p.x.to_f64().unwrap_or(f64::NAN),
                y: p.y.to_f64().unwrap_or(f64::NAN),
                object_labels: d.object_labels[i].clone(),
                attribute_labels: d.attribute_labels[i].clone(),
            })
            .collect();
        DiagramJson {
            concepts,
            edges: d.layout.edges.iter().map(|&(a, b)| [a, b]).collect(),
            dimension: d.dimension,
            realizer: d.realizer.clone(),
            crossings: d.layout.crossings,
        }
    }
}

pub fn to_json<T: Scalar>(d: &LabeledDiagram<T>) -> String {
    let mut s = serde_json::to_string_pretty(&DiagramJson::new(d)).expect("diagram serializes");
    s.push('\n');
    s
}
