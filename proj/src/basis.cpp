#include "gadic/basis.hpp"

#include <bit>
#include <ostream>

#include "gadic/errors.hpp"

namespace gadic {

std::string BasisSpec::to_string() const {
  return "sequence={" + seq.to_string() + "} partition={" + partition.to_string() + "}";
}

std::optional<ClassIndex> classify(const BasisSpec& spec, const DigitRep& rep) {
  if (rep.empty()) return std::nullopt;
  auto it = rep.digits().begin();
  auto c = spec.partition.color(it->first);
  for (++it; it != rep.digits().end(); ++it) {
    if (spec.partition.color(it->first) != c) return std::nullopt;
  }
  return c;
}

std::optional<ClassIndex> classify(const BasisSpec& spec, const BigInt& n) {
  if (sgn(n) <= 0) return std::nullopt;
  return classify(spec, spec.seq.represent(n));
}

// ---------------------------------------------------------------------------
// BitWindow

BitWindow::BitWindow(std::size_t max_value) : bits_(max_value + 1), words_((bits_ + 63) / 64, 0) {}

void BitWindow::clear_tail() {
  auto extra = words_.size() * 64 - bits_;
  if (extra) words_.back() &= ~std::uint64_t{0} >> extra;
}

void BitWindow::or_shifted(const BitWindow& other, std::size_t shift) {
  if (&other == this) {
    BitWindow copy = other;
    or_shifted(copy, shift);
    return;
  }
  const std::size_t n = words_.size();
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  if (word_shift >= n) return;
  const auto& src = other.words_;
  const std::size_t src_n = src.size();
  for (std::size_t i = n; i-- > word_shift;) {
    std::size_t s = i - word_shift;
    std::uint64_t w = s < src_n ? src[s] << bit_shift : 0;
    if (bit_shift && s >= 1 && s - 1 < src_n) w |= src[s - 1] >> (64 - bit_shift);
    words_[i] |= w;
  }
  clear_tail();
}

std::size_t BitWindow::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint64_t> BitWindow::to_vector() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void BitWindow::write_raw(std::ostream& out) const {
  const std::size_t nbytes = (bits_ + 7) / 8;
  for (std::size_t b = 0; b < nbytes; ++b) {
    auto byte = static_cast<char>((words_[b / 8] >> ((b % 8) * 8)) & 0xff);
    out.put(byte);
  }
}

// ---------------------------------------------------------------------------
// Enumeration

MemberWindow enumerate(const BasisSpec& spec, std::size_t max_value, std::size_t budget) {
  if (max_value < 1) throw DomainError("window bound must be >= 1");
  if (max_value >= budget) {
    throw WindowError("window [0, " + std::to_string(max_value) + "] exceeds budget of " +
                      std::to_string(budget) + " bits");
  }
  MemberWindow out;
  out.bits = BitWindow(max_value);

  // Odometer over 𝒢-adic digits of n = 0, 1, 2, ... tracking how many nonzero
  // digits each class carries; n is a member iff exactly one class is occupied.
  std::vector<std::uint64_t> quotients;  // quotients[j] = d_{j+1}
  std::vector<ClassIndex> colors;
  std::vector<std::uint64_t> digits;
  std::vector<std::size_t> occupancy(spec.h(), 0);
  std::size_t occupied = 0;

  auto bump = [&](ClassIndex c, bool up) {
    if (up) {
      if (occupancy[c]++ == 0) ++occupied;
    } else {
      if (--occupancy[c] == 0) --occupied;
    }
  };

  for (std::uint64_t n = 1; n <= max_value; ++n) {
    std::size_t j = 0;
    while (true) {
      if (j == digits.size()) {
        digits.push_back(0);
        quotients.push_back(spec.seq.quotient(j + 1));
        colors.push_back(spec.partition.color(j));
      }
      if (digits[j] + 1 < quotients[j]) {
        if (digits[j]++ == 0) bump(colors[j], true);
        break;
      }
      digits[j] = 0;
      bump(colors[j], false);
      ++j;
    }
    if (occupied == 1) {
      out.members.push_back(n);
      out.bits.set(n);
    }
  }
  return out;
}

void write_member_list(std::ostream& out, const MemberWindow& window) {
  for (auto m : window.members) out << m << '\n';
}

}  // namespace gadic
