#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace freeidem {

  //! A letter of a group word: generator `g` is encoded as `g + 1`, its
  //! inverse as `-(g + 1)`. Zero never occurs inside a word.
  using GroupLetter = std::int32_t;

  constexpr GroupLetter gen_letter(std::size_t gen, bool inverse = false) {
    auto const l = static_cast<GroupLetter>(gen + 1);
    return inverse ? -l : l;
  }

  constexpr std::size_t letter_gen(GroupLetter l) {
    return static_cast<std::size_t>((l < 0 ? -l : l) - 1);
  }

  constexpr bool letter_inverse(GroupLetter l) {
    return l < 0;
  }

  //! A word over a symmetric generating set. Words are freely reduced on
  //! construction through `reduced()` only when asked; concatenation keeps
  //! them reduced if both operands are.
  class GroupWord {
   public:
    GroupWord() = default;
    GroupWord(std::initializer_list<GroupLetter> letters);
    explicit GroupWord(std::vector<GroupLetter> letters);

    static GroupWord generator(std::size_t gen, bool inverse = false);

    [[nodiscard]] std::vector<GroupLetter> const& letters() const noexcept {
      return letters_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }

    [[nodiscard]] GroupWord inverse() const;
    [[nodiscard]] GroupWord reduced() const;
    [[nodiscard]] bool is_reduced() const;

    //! Concatenation followed by free cancellation at the seam.
    GroupWord& operator*=(GroupWord const& rhs);
    friend GroupWord operator*(GroupWord lhs, GroupWord const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    //! Replace each generator by a word (its inverse for inverse letters).
    [[nodiscard]] GroupWord
    substitute(std::function<GroupWord(std::size_t)> const& image) const;

    //! Render using generator names, "1" for the empty word.
    [[nodiscard]] std::string
    to_string(std::vector<std::string> const& names) const;

    friend bool operator==(GroupWord const&, GroupWord const&) = default;
    friend auto operator<=>(GroupWord const&, GroupWord const&) = default;

   private:
    std::vector<GroupLetter> letters_;
  };

  //! Free reduction of a raw letter sequence.
  std::vector<GroupLetter> free_reduce(std::vector<GroupLetter> letters);

}  // namespace freeidem
