#include "a3stab/exccol.hpp"

#include <algorithm>
#include <set>

namespace a3stab {

namespace {

const Interval S1{1, 1}, S2{2, 2}, S3{3, 3}, S12{1, 2}, S23{2, 3}, S123{1, 3};

std::set<Interval> support(const Triple& e) { return {e.begin(), e.end()}; }

Interval from_class(const DimVector& v) {
  auto m = identify_class(v);
  if (!m) throw std::logic_error("mutation left the interval classes");
  return m->interval;
}

}  // namespace

std::string ExcSequence::name() const {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) s += (i ? "," : "") + objects[i].name();
  return s + ")";
}

bool is_exceptional_sequence(const Triple& e) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (hom_ext(e[i], e[j]) != HomExt{0, 0}) return false;
  return true;
}

Eigen::Matrix3i class_matrix(const Triple& e) {
  Eigen::Matrix3i m;
  for (int i = 0; i < 3; ++i) m.col(i) = e[i].dimvec();
  return m;
}

bool is_complete(const Triple& e) {
  const int d = class_matrix(e).determinant();
  return d == 1 || d == -1;
}

std::vector<ExcSequence> enumerate_sequences() {
  std::vector<ExcSequence> out;
  for (const auto& a : kIntervals)
    for (const auto& b : kIntervals)
      for (const auto& c : kIntervals) {
        Triple t{a, b, c};
        if (a == b || b == c || a == c) continue;
        if (is_exceptional_sequence(t) && is_complete(t)) out.push_back({t, classify(t)});
      }
  return out;
}

const std::array<Triple, 12>& class_representatives() {
  static const std::array<Triple, 12> reps{{
      {S1, S2, S3},      // A
      {S2, S12, S3},     // B
      {S2, S3, S123},    // C
      {S3, S23, S123},   // D
      {S3, S123, S1},    // E
      {S123, S12, S1},   // F
      {S123, S1, S2},    // G
      {S1, S23, S2},     // H
      {S12, S1, S3},     // I
      {S23, S2, S123},   // J
      {S2, S123, S12},   // K
      {S3, S1, S23},     // L
  }};
  return reps;
}

char class_label(int index) { return char('A' + index); }
int class_index(char label) {
  if (label < 'A' || label > 'L') throw std::invalid_argument("class label must be A..L");
  return label - 'A';
}

char classify(const Triple& e) {
  const auto s = support(e);
  const auto& reps = class_representatives();
  for (int i = 0; i < 12; ++i)
    if (support(reps[i]) == s) return class_label(i);
  throw UnmatchedClass("no tabulated class with support " + ExcSequence{e, {}}.name());
}

std::vector<ArayaClass> araya_classes(const std::vector<ExcSequence>& seqs) {
  std::vector<ArayaClass> out;
  for (int i = 0; i < 12; ++i) out.push_back({class_label(i), class_representatives()[i], {}});
  for (const auto& s : seqs) out[class_index(classify(s.objects))].members.push_back(s);
  for (auto& c : out)
    if (c.members.empty()) throw UnmatchedClass(std::string("class ") + c.label + " has no sequence");
  return out;
}

Triple right_mutation(const Triple& e, int i) {
  if (i < 1 || i > 2) throw std::invalid_argument("mutation index must be 1 or 2");
  const Interval& a = e[i - 1];
  const Interval& b = e[i];
  const DimVector r = euler_form(a.dimvec(), b.dimvec()) * b.dimvec() - a.dimvec();
  Triple out = e;
  out[i - 1] = b;
  out[i] = from_class(r);
  return out;
}

Triple left_mutation(const Triple& e, int i) {
  if (i < 1 || i > 2) throw std::invalid_argument("mutation index must be 1 or 2");
  const Interval& a = e[i - 1];
  const Interval& b = e[i];
  const DimVector l = euler_form(a.dimvec(), b.dimvec()) * a.dimvec() - b.dimvec();
  Triple out = e;
  out[i - 1] = from_class(l);
  out[i] = a;
  return out;
}

bool MutationGraph::connected() const {
  if (nodes.empty()) return true;
  std::set<char> seen{nodes.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& ed : edges) {
      const bool f = seen.count(ed.from), t = seen.count(ed.to);
      if (f != t) { seen.insert(ed.from); seen.insert(ed.to); grew = true; }
    }
  }
  return seen.size() == nodes.size();
}

MutationGraph mutation_graph() {
  MutationGraph g;
  for (int i = 0; i < 12; ++i) g.nodes.push_back(class_label(i));
  std::set<MutationEdge> edges;
  for (const auto& s : enumerate_sequences())
    for (int k = 1; k <= 2; ++k)
      edges.insert({classify(s.objects), classify(right_mutation(s.objects, k)), k});
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool braid_relation_holds(const Triple& e) {
  auto r = [](const Triple& t, int i) { return right_mutation(t, i); };
  return r(r(r(e, 1), 2), 1) == r(r(r(e, 2), 1), 2);
}

bool left_right_inverse(const Triple& e, int i) {
  return left_mutation(right_mutation(e, i), i) == e && right_mutation(left_mutation(e, i), i) == e;
}

}  // namespace a3stab
