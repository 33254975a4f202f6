//! Output formats: hierarchy JSON, Newick trees and label CSVs.

use serde::{Deserialize, Serialize};

use nnhier::{ClusterTree, Hierarchy, Level, Partition, PointId, Provenance};

use crate::error::CliError;

/// The JSON document for a clustering run: the flat levels, the tree
/// view, and optionally the selected partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HierarchyDoc {
    pub n: usize,
    pub k_star: usize,
    pub levels: Vec<LevelDoc>,
    pub tree: TreeNodeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub k: usize,
    pub clusters: Vec<Vec<PointId>>,
}

/// One tree node: represented by its minimum member id rather than the
/// full member list, which the leaves below it already spell out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeNodeDoc {
    pub members_rep: PointId,
    pub size: usize,
    pub formation_k: usize,
    pub children: Vec<TreeNodeDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub mode: String,
    pub clusters: Vec<PartitionClusterDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionClusterDoc {
    pub ids: Vec<PointId>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

fn tree_node_doc(tree: &ClusterTree, index: usize) -> TreeNodeDoc {
    let node = tree.node(index);
    TreeNodeDoc {
        members_rep: node.canonical_id(),
        size: node.size(),
        formation_k: node.formation_k(),
        children: node
            .children()
            .iter()
            .map(|&child| tree_node_doc(tree, child))
            .collect(),
    }
}

pub fn partition_doc(partition: &Partition, mode: &str) -> PartitionDoc {
    PartitionDoc {
        mode: mode.to_string(),
        clusters: partition
            .clusters()
            .iter()
            .map(|cluster| {
                let (provenance, k) = match cluster.provenance() {
                    Provenance::BonaFide { k } => ("bona_fide", Some(k)),
                    Provenance::Remainder => ("remainder", None),
                    Provenance::Coarse => ("coarse", None),
                };
                PartitionClusterDoc {
                    ids: cluster.members().to_vec(),
                    provenance: provenance.to_string(),
                    k,
                }
            })
            .collect(),
    }
}

pub fn hierarchy_doc(hierarchy: &Hierarchy, partition: Option<PartitionDoc>) -> HierarchyDoc {
    let tree = hierarchy.to_tree();
    HierarchyDoc {
        n: hierarchy.n(),
        k_star: hierarchy.k_star(),
        levels: hierarchy
            .levels()
            .iter()
            .map(|level| LevelDoc {
                k: level.k(),
                clusters: level.clusters().to_vec(),
            })
            .collect(),
        tree: tree_node_doc(&tree, tree.root_index()),
        partition,
    }
}

/// Pretty JSON with a trailing newline; serialization is deterministic,
/// so equal documents give byte-equal output.
pub fn to_json(doc: &HierarchyDoc) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<HierarchyDoc, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Data(format!("invalid hierarchy JSON: {e}")))
}

/// Rebuilds the in-memory hierarchy from a parsed document. The level
/// clusters carry all the information; the tree is a derived view.
pub fn doc_to_hierarchy(doc: &HierarchyDoc) -> Result<Hierarchy, CliError> {
    let levels = doc
        .levels
        .iter()
        .map(|level| Level::from_clusters(level.k, level.clusters.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Hierarchy::from_levels(levels)?)
}

/// Newick serialization of the tree view. Leaves are point ids; every
/// branch length is the formation-k difference to the parent, so the
/// dendrogram height axis is the neighbor depth k.
pub fn to_newick(tree: &ClusterTree) -> String {
    fn write_node(tree: &ClusterTree, index: usize, parent_formation_k: Option<usize>, out: &mut String) {
        let node = tree.node(index);
        if !node.is_leaf() {
            out.push('(');
            for (i, &child) in node.children().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_node(tree, child, Some(node.formation_k()), out);
            }
            out.push(')');
        }
        if node.is_leaf() {
            out.push_str(&node.canonical_id().to_string());
        }
        if let Some(parent_k) = parent_formation_k {
            out.push(':');
            out.push_str(&(parent_k - node.formation_k()).to_string());
        }
    }

    let mut out = String::new();
    write_node(tree, tree.root_index(), None, &mut out);
    out.push_str(";\n");
    out
}

/// Two-column `id,label` CSV of a partition's flat labels.
pub fn to_labels_csv(partition: &Partition) -> String {
    let mut out = String::from("id,label\n");
    for (id, label) in partition.labels().iter().enumerate() {
        out.push_str(&format!("{id},{label}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use nnhier::{build_hierarchy, natural_partition, Dataset, KnnBackend, Metric};

    fn line_hierarchy() -> Hierarchy {
        let ds = Dataset::from_rows(&[[0.0], [1.0], [10.0], [11.0]]).unwrap();
        build_hierarchy(&ds, &Metric::Euclidean, KnnBackend::Brute).unwrap()
    }

    #[test]
    fn json_round_trips_to_an_equal_hierarchy() {
        let h = line_hierarchy();
        let doc = hierarchy_doc(&h, None);
        let text = to_json(&doc);
        let parsed = from_json(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(doc_to_hierarchy(&parsed).unwrap(), h);
    }

    #[test]
    fn newick_of_the_line() {
        let h = line_hierarchy();
        assert_eq!(to_newick(&h.to_tree()), "((0:1,1:1):1,(2:1,3:1):1);\n");
    }

    #[test]
    fn newick_of_a_single_point_is_a_bare_leaf() {
        let ds = Dataset::from_rows(&[[1.0]]).unwrap();
        let h = build_hierarchy(&ds, &Metric::Euclidean, KnnBackend::Brute).unwrap();
        assert_eq!(to_newick(&h.to_tree()), "0;\n");
    }

    #[test]
    fn labels_csv_uses_canonical_ids() {
        let h = line_hierarchy();
        let p = natural_partition(&h).unwrap();
        assert_eq!(to_labels_csv(&p), "id,label\n0,0\n1,0\n2,2\n3,2\n");
    }

    #[test]
    fn partition_doc_carries_provenance() {
        let h = line_hierarchy();
        let p = natural_partition(&h).unwrap();
        let doc = partition_doc(&p, "natural");
        assert_eq!(doc.clusters.len(), 2);
        assert_eq!(doc.clusters[0].provenance, "bona_fide");
        assert_eq!(doc.clusters[0].k, Some(1));
        assert_eq!(doc.clusters[0].ids, vec![0, 1]);
    }
}
