#pragma once

#include "a3stab/repcore.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace a3stab {

using Triple = std::array<Interval, 3>;

struct ExcSequence {
  Triple objects;
  std::optional<char> label;  // class label A..L once classified

  std::string name() const;
};

struct UnmatchedClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// hom_ext(E_i, E_j) vanishes for every i > j.
bool is_exceptional_sequence(const Triple& e);
/// Classes form a Z-basis of K_0.
bool is_complete(const Triple& e);
Eigen::Matrix3i class_matrix(const Triple& e);  // columns are dimension vectors

/// All 16 ordered complete exceptional sequences of interval modules.
std::vector<ExcSequence> enumerate_sequences();

/// Representative orderings of the twelve classes A..L, as tabulated.
const std::array<Triple, 12>& class_representatives();
char class_label(int index);
int class_index(char label);

/// Araya class of a sequence; identical support set as a representative.
char classify(const Triple& e);

struct ArayaClass {
  char label;
  Triple representative;
  std::vector<ExcSequence> members;
};

std::vector<ArayaClass> araya_classes(const std::vector<ExcSequence>& seqs);

// Mutations at position i in {1, 2} acting on (E_i, E_{i+1}); the new object is
// read off from its class, shift discarded.
Triple right_mutation(const Triple& e, int i);
Triple left_mutation(const Triple& e, int i);

struct MutationEdge {
  char from;
  char to;
  int generator;  // 1 or 2, i.e. R_1 or R_2
  bool self_loop() const { return from == to; }
  auto operator<=>(const MutationEdge&) const = default;
};

struct MutationGraph {
  std::vector<char> nodes;
  std::vector<MutationEdge> edges;  // deduplicated

  bool connected() const;
};

MutationGraph mutation_graph();

/// R_1 R_2 R_1 = R_2 R_1 R_2 on classes, and L_i R_i = id on orderings.
bool braid_relation_holds(const Triple& e);
bool left_right_inverse(const Triple& e, int i);

}  // namespace a3stab
