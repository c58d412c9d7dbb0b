#pragma once

// The self-describing JSON document shared by every CLI command: an optional
// instance, a placement, and optional annotations, verification report,
// search summary and area-coverage dump.
//
//   {
//     "version": 1,
//     "instance": {"p": 9, "budget": 30, "obstacles": [{"x1":0,"y1":3,"x2":10,"y2":4}]},
//     "sources": [{"x": 1, "y": 2, "r": "1"}, ...],
//     "annotations": {"algorithm": "asgc", "fraction_case": 0,
//                     "gadgets": [{"kind": "G3", "x": 1, "y": 1, "orientation": "identity"}],
//                     "connectors": [{"x": 2, "y": 3}], "deletions": [{"x": 2, "y": 5}]},
//     "report": {"passed": true, ...},
//     "search": {"exhausted": true, "optimal_count": 6},
//     "coverage": {"mode": "sweep", "radius": "1", ...}
//   }

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgpc/asgc.hpp"
#include "sgpc/grid.hpp"
#include "sgpc/motion.hpp"
#include "sgpc/verifier.hpp"

namespace sgpc {

inline constexpr int kDocumentVersion = 1;

/// Malformed or semantically invalid document text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Annotations {
  std::string algorithm;
  std::optional<int> fraction_case;
  std::vector<GadgetPlacement> gadgets;
  std::vector<GridPoint> connectors;
  std::vector<GridPoint> deletions;

  friend bool operator==(const Annotations&, const Annotations&) = default;
};

struct SearchSummary {
  bool exhausted = false;
  int optimal_count = 0;

  friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

struct CoverageDump {
  std::string mode;  // "sweep" or "area"
  Radius radius;
  std::vector<Direction> path;
  Rational resolution;
  GridPoint origin;
  int width = 0;
  int height = 0;
  bool covered = false;
  std::size_t sample_count = 0;
  std::vector<ContinuousPoint> uncovered_samples;

  friend bool operator==(const CoverageDump&, const CoverageDump&) = default;
};

struct PlacementDocument {
  int version = kDocumentVersion;
  std::optional<Instance> instance;
  Placement placement;
  std::optional<Annotations> annotations;
  std::optional<VerificationReport> report;
  std::optional<SearchSummary> search;
  std::optional<CoverageDump> coverage;

  friend bool operator==(const PlacementDocument&, const PlacementDocument&) = default;
};

/// Pretty-printed JSON with a trailing newline. Keys appear in a fixed order.
std::string serialize(const PlacementDocument& doc);

/// Throws ParseError naming the offending field.
PlacementDocument parse_document(const std::string& text);

PlacementDocument read_document(const std::filesystem::path& path);

/// Writes through a temporary file in the target directory and renames it into
/// place, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Direction letters "N", "S", "E", "W"; a path is written as e.g. "NSSNEWWE".
std::string format_path(const MovePath& path);
MovePath parse_path(std::string_view text);

}  // namespace sgpc
