#pragma once

#include <filesystem>
#include <string>

#include "gia/graph/graph.hpp"

namespace gia {

/// Loads a dataset in the TUDataset plain-text layout from
/// `root_path/name/name_*.txt`:
///   name_A.txt               comma-separated edge pairs, 1-indexed global ids
///   name_graph_indicator.txt graph id (1-indexed) per node line
///   name_graph_labels.txt    class label per graph line
///   name_node_labels.txt     optional categorical node label per node line
///   name_node_attributes.txt optional comma-separated real attributes per node
///
/// Node ids are remapped to per-graph 0-based ids. Node labels are one-hot
/// encoded over the distinct values in the dataset; when attributes are also
/// present the attributes are concatenated with the one-hot labels. Graph
/// labels are remapped to contiguous 0-based classes (sorted by raw value).
/// Duplicate edges collapse; self-loops are dropped.
///
/// Throws IngestError when a mandatory file is missing and FormatError on
/// malformed content (e.g. an edge endpoint that belongs to no node).
GraphDataset load_tudataset(const std::filesystem::path& root_path,
                            const std::string& name);

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gia
