#pragma once

#include <string>

namespace einflag {

enum class Verdict {
  NaturallyReductive_GxH,  // the two isotropy blocks carry equal scale
  NaturallyReductive_GxK,  // the h0/h1 (resp. h0) scales match the m2 scale
  BiInvariant,
  NotNaturallyReductive,
};

std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::NotNaturallyReductive;
  std::string witness;  // which equality pattern fired
};

}  // namespace einflag
