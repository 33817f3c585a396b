#include "freeidem/fountain.hpp"

#include "freeidem/error.hpp"
#include "freeidem/green_ig.hpp"

namespace freeidem {

  Word reduced_form(Structure const& s, std::span<Element const> w) {
    if (w.empty()) {
      fail(ErrorCode::MalformedInput, "empty word");
    }
    auto const fp = minimal_r_factorisation(s.biorder(), s.green(), w);
    Word       out;
    for (auto const& f : fp.factors) {
      auto const nf = idempotent_normal_form(s, w.subspan(f.begin, f.end - f.begin));
      out.insert(out.end(), nf.begin(), nf.end());
    }
    return out;
  }

  TildeWitnesses tilde_witnesses(Structure const& s, std::span<Element const> w) {
    if (w.empty()) {
      fail(ErrorCode::MalformedInput, "empty word");
    }
    auto const fp    = minimal_r_factorisation(s.biorder(), s.green(), w);
    auto const& head = fp.factors.front();
    auto const& tail = fp.factors.back();
    auto const first = idempotent_normal_form(s, w.subspan(head.begin, head.end - head.begin));
    auto const last  = idempotent_normal_form(s, w.subspan(tail.begin, tail.end - tail.begin));
    return {first.front(), last.back()};
  }

  bool tilde_r_equivalent(Structure const& s, std::span<Element const> w1, std::span<Element const> w2) {
    auto const& r = s.green().r_class;
    return r[tilde_witnesses(s, w1).e_r] == r[tilde_witnesses(s, w2).e_r];
  }

  bool tilde_l_equivalent(Structure const& s, std::span<Element const> w1, std::span<Element const> w2) {
    auto const& l = s.green().l_class;
    return l[tilde_witnesses(s, w1).e_l] == l[tilde_witnesses(s, w2).e_l];
  }

}  // namespace freeidem
