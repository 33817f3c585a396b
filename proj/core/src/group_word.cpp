#include "freeidem/group_word.hpp"

#include <algorithm>
#include <utility>

namespace freeidem {

  std::vector<GroupLetter> free_reduce(std::vector<GroupLetter> letters) {
    std::vector<GroupLetter> out;
    out.reserve(letters.size());
    for (GroupLetter l : letters) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  GroupWord::GroupWord(std::initializer_list<GroupLetter> letters)
      : letters_(letters) {}

  GroupWord::GroupWord(std::vector<GroupLetter> letters)
      : letters_(std::move(letters)) {}

  GroupWord GroupWord::generator(std::size_t gen, bool inverse) {
    return GroupWord({gen_letter(gen, inverse)});
  }

  GroupWord GroupWord::inverse() const {
    std::vector<GroupLetter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) {
      l = -l;
    }
    return GroupWord(std::move(out));
  }

  GroupWord GroupWord::reduced() const {
    return GroupWord(free_reduce(letters_));
  }

  bool GroupWord::is_reduced() const {
    for (std::size_t k = 1; k < letters_.size(); ++k) {
      if (letters_[k] == -letters_[k - 1]) {
        return false;
      }
    }
    return true;
  }

  GroupWord& GroupWord::operator*=(GroupWord const& rhs) {
    auto it = rhs.letters_.begin();
    while (it != rhs.letters_.end() && !letters_.empty()
           && letters_.back() == -*it) {
      letters_.pop_back();
      ++it;
    }
    letters_.insert(letters_.end(), it, rhs.letters_.end());
    return *this;
  }

  GroupWord GroupWord::substitute(
      std::function<GroupWord(std::size_t)> const& image) const {
    GroupWord out;
    for (GroupLetter l : letters_) {
      GroupWord piece = image(letter_gen(l));
      if (letter_inverse(l)) {
        piece = piece.inverse();
      }
      out *= piece;
    }
    return out;
  }

  std::string GroupWord::to_string(std::vector<std::string> const& names) const {
    if (letters_.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      auto const g = letter_gen(letters_[k]);
      out += g < names.size() ? names[g] : "x" + std::to_string(g + 1);
      if (letter_inverse(letters_[k])) {
        out += "^-1";
      }
    }
    return out;
  }

}  // namespace freeidem
