#include "simat/structure/report.hpp"

namespace simat {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HoldsExhaustive:
      return "holds-exhaustive";
    case Verdict::HoldsSampled:
      return "holds-sampled";
    case Verdict::HoldsStructural:
      return "holds-structural";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inapplicable:
      return "inapplicable";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

bool verdict_holds(Verdict v) {
  return v == Verdict::HoldsExhaustive || v == Verdict::HoldsSampled ||
         v == Verdict::HoldsStructural;
}

bool StructureReport::ok() const {
  for (const AxiomResult& a : axioms)
    if (a.verdict == Verdict::Fails || a.verdict == Verdict::Unknown) return false;
  return true;
}

const AxiomResult* StructureReport::find(const std::string& axiom) const {
  for (const AxiomResult& a : axioms)
    if (a.axiom == axiom) return &a;
  return nullptr;
}

void StructureReport::add(std::string axiom, Verdict v,
                          std::vector<SuperIntervalMatrix> witness, std::string note) {
  axioms.push_back({std::move(axiom), v, std::move(witness), std::move(note)});
}

}  // namespace simat
