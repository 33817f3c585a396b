#include "freeidem/todd_coxeter.hpp"

#include <deque>
#include <limits>
#include <string>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();

    std::size_t column(GroupLetter l) {
      return 2 * letter_gen(l) + (letter_inverse(l) ? 1 : 0);
    }

    std::size_t inverse_column(std::size_t x) {
      return x ^ 1U;
    }

    class Enumerator {
     public:
      Enumerator(std::size_t num_gens, std::size_t bound)
          : width_(2 * num_gens), bound_(bound) {
        new_coset();
      }

      void run(std::vector<std::vector<std::size_t>> const& relators) {
        for (std::uint32_t c = 0; c < table_.size(); ++c) {
          for (auto const& r : relators) {
            if (!alive(c)) {
              break;
            }
            scan_and_fill(c, r);
          }
          for (std::size_t x = 0; x < width_ && alive(c); ++x) {
            if (at(c, x) == kUndef) {
              define(c, x);
            }
          }
        }
      }

      CosetTable compact(std::size_t num_gens) {
        std::vector<std::uint32_t> renum(table_.size(), kUndef);
        std::uint32_t              next = 0;
        for (std::uint32_t c = 0; c < table_.size(); ++c) {
          if (alive(c)) {
            renum[c] = next++;
          }
        }
        CosetTable out;
        out.num_gens = num_gens;
        out.action.assign(next, std::vector<std::uint32_t>(width_));
        for (std::uint32_t c = 0; c < table_.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (std::size_t x = 0; x < width_; ++x) {
            out.action[renum[c]][x] = renum[find(at(c, x))];
          }
        }
        return out;
      }

     private:
      std::uint32_t& at(std::uint32_t c, std::size_t x) {
        return table_[c][x];
      }
      bool alive(std::uint32_t c) const {
        return parent_[c] == c;
      }
      std::uint32_t find(std::uint32_t c) {
        while (parent_[c] != c) {
          parent_[c] = parent_[parent_[c]];
          c          = parent_[c];
        }
        return c;
      }

      std::uint32_t new_coset() {
        if (table_.size() >= bound_) {
          fail(ErrorCode::BoundExceeded,
               "coset enumeration exceeded " + std::to_string(bound_) + " cosets");
        }
        auto const c = static_cast<std::uint32_t>(table_.size());
        table_.emplace_back(width_, kUndef);
        parent_.push_back(c);
        return c;
      }

      void define(std::uint32_t c, std::size_t x) {
        auto const d             = new_coset();
        at(c, x)                 = d;
        at(d, inverse_column(x)) = c;
      }

      void scan_and_fill(std::uint32_t c, std::vector<std::size_t> const& r) {
        std::uint32_t  f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
        while (true) {
          while (i <= j && at(f, r[i]) != kUndef) {
            f = at(f, r[i++]);
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, inverse_column(r[j])) != kUndef) {
            b = at(b, inverse_column(r[j--]));
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            at(f, r[i])                 = b;
            at(b, inverse_column(r[i])) = f;
            return;
          }
          define(f, r[i]);
        }
      }

      void merge(std::uint32_t a, std::uint32_t b, std::deque<std::uint32_t>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent_[b] = a;
        queue.push_back(b);
      }

      void coincidence(std::uint32_t a, std::uint32_t b) {
        std::deque<std::uint32_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
          auto const e = queue.front();
          queue.pop_front();
          for (std::size_t x = 0; x < width_; ++x) {
            auto const f = at(e, x);
            if (f == kUndef) {
              continue;
            }
            auto const xi = inverse_column(x);
            if (at(f, xi) == e) {
              at(f, xi) = kUndef;
            }
            auto const e1 = find(e), f1 = find(f);
            if (at(e1, x) != kUndef) {
              merge(f1, at(e1, x), queue);
            } else if (at(f1, xi) != kUndef) {
              merge(e1, at(f1, xi), queue);
            } else {
              at(e1, x)  = f1;
              at(f1, xi) = e1;
            }
          }
        }
      }

      std::size_t                             width_;
      std::size_t                             bound_;
      std::vector<std::vector<std::uint32_t>> table_;
      std::vector<std::uint32_t>              parent_;
    };
  }  // namespace

  std::uint32_t CosetTable::apply(std::uint32_t c, GroupWord const& w) const {
    for (auto l : w.letters()) {
      c = action[c][column(l)];
    }
    return c;
  }

  CosetTable todd_coxeter(std::size_t                   num_gens,
                          std::vector<GroupWord> const& relators,
                          std::size_t                   bound) {
    std::vector<std::vector<std::size_t>> rels;
    for (auto const& r : relators) {
      std::vector<std::size_t> cols;
      for (auto l : r.letters()) {
        if (letter_gen(l) >= num_gens) {
          fail(ErrorCode::MalformedInput, "relator uses an unknown generator");
        }
        cols.push_back(column(l));
      }
      rels.push_back(std::move(cols));
    }
    Enumerator en(num_gens, bound);
    en.run(rels);
    return en.compact(num_gens);
  }

}  // namespace freeidem
