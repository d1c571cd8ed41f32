#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Stable error vocabulary.  Every throwing operation in the library raises
// spectra::error with one of these codes; the CLI maps codes to exit codes.
enum class errc {
  loop_edge,
  duplicate_edge,
  empty_edge_set,
  too_many_vertices,
  invalid_vertex,
  malformed_header,
  truncated_bits,
  malformed_edge_list,
  unreachable,
  empty_spectrum,
  non_injective,
  label_out_of_range,
  labeling_size_mismatch,
  malformed_labeling,
  not_bijective,
  empty_sequence,
  not_a_galaxy,
  disconnected,
  not_an_edge,
  not_in_lambda,
  too_many_edges,
  chain_broken,
  not_eligible,
  invalid_path,
  broken_invariant,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::empty_edge_set: return "EmptyEdgeSet";
    case errc::too_many_vertices: return "TooManyVertices";
    case errc::invalid_vertex: return "InvalidVertex";
    case errc::malformed_header: return "MalformedHeader";
    case errc::truncated_bits: return "TruncatedBits";
    case errc::malformed_edge_list: return "MalformedEdgeList";
    case errc::unreachable: return "Unreachable";
    case errc::empty_spectrum: return "EmptySpectrum";
    case errc::non_injective: return "NonInjective";
    case errc::label_out_of_range: return "LabelOutOfRange";
    case errc::labeling_size_mismatch: return "LabelingSizeMismatch";
    case errc::malformed_labeling: return "MalformedLabeling";
    case errc::not_bijective: return "NotBijective";
    case errc::empty_sequence: return "EmptySequence";
    case errc::not_a_galaxy: return "NotAGalaxy";
    case errc::disconnected: return "Disconnected";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::not_in_lambda: return "NotInLambda";
    case errc::too_many_edges: return "TooManyEdges";
    case errc::chain_broken: return "ChainBroken";
    case errc::not_eligible: return "NotEligible";
    case errc::invalid_path: return "InvalidPath";
    case errc::broken_invariant: return "BrokenInvariant";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }
  // The bare text, without the code-name prefix baked into what().
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace spectra
