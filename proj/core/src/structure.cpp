#include "freeidem/structure.hpp"

#include "freeidem/contact.hpp"
#include "freeidem/error.hpp"

namespace freeidem {

  struct Structure::Lazy {
    struct Slot {
      std::once_flag               once;
      std::unique_ptr<Presentation> presentation;
      std::unique_ptr<GroupBackend> backend;
    };
    std::vector<std::unique_ptr<Slot>>                                        slots;
    std::mutex                                                                contact_mutex;
    std::map<std::pair<ClassId, ClassId>, std::unique_ptr<ContactAutomaton>> contacts;
  };

  Structure::Structure(BiorderedSet b, Options opts)
      : b_(std::move(b)), opts_(opts), green_(green_data(b_)), lazy_(std::make_unique<Lazy>()) {
    auto const k = green_.num_classes();
    for (ClassId c = 0; c < k; ++c) {
      grids_.push_back(dclass_grid(b_, green_, c));
      lazy_->slots.push_back(std::make_unique<Lazy::Slot>());
    }
    actions_.resize(k);
    for (ClassId c = 0; c < k; ++c) {
      actions_[c].reserve(b_.size());
      for (Element e = 0; e < b_.size(); ++e) {
        actions_[c].push_back(sigma_tau(b_, green_, grids_[c], e));
      }
    }
  }

  Structure::~Structure()                               = default;
  Structure::Structure(Structure&&) noexcept            = default;
  Structure& Structure::operator=(Structure&&) noexcept = default;

  DClassGrid const& Structure::grid(ClassId c) const {
    if (c >= grids_.size()) {
      fail(ErrorCode::UnknownClass, std::to_string(c));
    }
    return grids_[c];
  }

  PartialAction const& Structure::action(ClassId c, Element e) const {
    if (c >= grids_.size()) {
      fail(ErrorCode::UnknownClass, std::to_string(c));
    }
    if (e >= b_.size()) {
      fail(ErrorCode::UnknownLetter, std::to_string(e));
    }
    return actions_[c][e];
  }

  std::optional<ClassId> Structure::identity_class() const {
    if (auto one = b_.identity()) {
      return green_.d_class[*one];
    }
    return std::nullopt;
  }

  Presentation const& Structure::presentation(ClassId c) const {
    (void) backend(c);
    return *lazy_->slots[c]->presentation;
  }

  GroupBackend const& Structure::backend(ClassId c) const {
    auto const& g    = grid(c);
    auto&       slot = *lazy_->slots[c];
    std::call_once(slot.once, [&] {
      slot.presentation = std::make_unique<Presentation>(freeidem::presentation(b_, g));
      slot.backend = std::make_unique<GroupBackend>(classify(*slot.presentation, opts_.coset_bound));
    });
    return *slot.backend;
  }

  ContactAutomaton const& Structure::contact(ClassId c1, ClassId c2) const {
    (void) grid(c1);
    (void) grid(c2);
    std::lock_guard lock(lazy_->contact_mutex);
    auto&           slot = lazy_->contacts[{c1, c2}];
    if (!slot) {
      slot = std::make_unique<ContactAutomaton>(build_contact(*this, c1, c2));
    }
    return *slot;
  }

  GroupWord Structure::f(ClassId c, std::size_t i, std::size_t lambda) const {
    auto const k = grid(c).cell_index(i, lambda);
    if (k == kNone) {
      fail(ErrorCode::Internal, "no idempotent in the requested cell");
    }
    return GroupWord::generator(k);
  }

}  // namespace freeidem
