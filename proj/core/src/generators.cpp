#include "freeidem/generators.hpp"

#include <vector>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    using Map = std::vector<int>;  // images 0..n-1, -1 undefined

    std::vector<Map> all_maps(std::size_t n, bool partial) {
      std::vector<Map> out;
      Map              cur(n, partial ? -1 : 0);
      int const        lo = partial ? -1 : 0;
      int const        hi = static_cast<int>(n) - 1;
      while (true) {
        out.push_back(cur);
        std::size_t k = n;
        while (k > 0 && cur[k - 1] == hi) {
          cur[k - 1] = lo;
          --k;
        }
        if (k == 0) {
          return out;
        }
        ++cur[k - 1];
      }
    }

    Map compose(Map const& s, Map const& t) {
      Map out(s.size(), -1);
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (s[x] >= 0) {
          out[x] = t[static_cast<std::size_t>(s[x])];
        }
      }
      return out;
    }

    bool idempotent(Map const& s) {
      return compose(s, s) == s;
    }

    std::string map_name(Map const& s, bool partial) {
      std::string out(1, partial ? 'p' : 't');
      for (auto x : s) {
        out += std::to_string(x + 1);
      }
      return out;
    }

    void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxDegree) {
        fail(ErrorCode::SizeLimit,
             "degree must be between 1 and " + std::to_string(kMaxDegree));
      }
    }

    RawBiorder maps_biorder(std::size_t n, bool partial) {
      check_degree(n);
      std::vector<Map> idem;
      for (auto const& s : all_maps(n, partial)) {
        if (idempotent(s)) {
          idem.push_back(s);
        }
      }
      RawBiorder raw;
      for (auto const& e : idem) {
        raw.elements.push_back(map_name(e, partial));
      }
      for (std::size_t a = 0; a < idem.size(); ++a) {
        for (std::size_t c = 0; c < idem.size(); ++c) {
          auto const ef = compose(idem[a], idem[c]);
          auto const fe = compose(idem[c], idem[a]);
          if (a == c || ef == idem[a] || ef == idem[c] || fe == idem[a] || fe == idem[c]) {
            raw.products.push_back({raw.elements[a], raw.elements[c], map_name(ef, partial)});
          }
        }
      }
      return raw;
    }

    CayleyTable maps_cayley(std::size_t n, bool partial) {
      check_degree(n);
      auto const maps = all_maps(n, partial);
      if (maps.size() > kMaxCayley) {
        fail(ErrorCode::SizeLimit, "Cayley table would have " + std::to_string(maps.size())
                                       + " rows (limit " + std::to_string(kMaxCayley) + ")");
      }
      auto index = [&maps](Map const& s) {
        for (std::size_t k = 0; k < maps.size(); ++k) {
          if (maps[k] == s) {
            return k;
          }
        }
        return kNone;
      };
      CayleyTable t;
      for (auto const& s : maps) {
        t.elements.push_back(map_name(s, partial));
      }
      t.table.assign(maps.size(), std::vector<std::size_t>(maps.size()));
      for (std::size_t a = 0; a < maps.size(); ++a) {
        for (std::size_t c = 0; c < maps.size(); ++c) {
          t.table[a][c] = index(compose(maps[a], maps[c]));
        }
      }
      return t;
    }

    std::string pair_name(char prefix, std::size_t i, std::size_t j) {
      if (i < 9 && j < 9) {
        return prefix + std::to_string(i + 1) + std::to_string(j + 1);
      }
      return prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    }
  }  // namespace

  RawBiorder transformation_biorder(std::size_t n) {
    return maps_biorder(n, false);
  }

  RawBiorder partial_transformation_biorder(std::size_t n) {
    return maps_biorder(n, true);
  }

  CayleyTable transformation_cayley(std::size_t n) {
    return maps_cayley(n, false);
  }

  CayleyTable partial_transformation_cayley(std::size_t n) {
    return maps_cayley(n, true);
  }

  RawBiorder rectangular_band(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0 || m * n > 4096) {
      fail(ErrorCode::SizeLimit, "rectangular band dimensions out of range");
    }
    RawBiorder raw;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        raw.elements.push_back(pair_name('e', i, l));
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t u = 0; u < n; ++u) {
            if (i == j || l == u) {
              raw.products.push_back({pair_name('e', i, l), pair_name('e', j, u), pair_name('e', i, u)});
            }
          }
        }
      }
    }
    return raw;
  }

  RawBiorder free_pair() {
    return {{"e", "f"}, {{"e", "e", "e"}, {"f", "f", "f"}}};
  }

  RawBiorder semilattice_chain(std::size_t n) {
    if (n == 0 || n > 4096) {
      fail(ErrorCode::SizeLimit, "chain length out of range");
    }
    RawBiorder raw;
    for (std::size_t i = 0; i < n; ++i) {
      raw.elements.push_back("c" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        raw.products.push_back({raw.elements[i], raw.elements[j], raw.elements[std::max(i, j)]});
      }
    }
    return raw;
  }

}  // namespace freeidem
