#include "numdiag/numerical_set.hpp"

#include <algorithm>
#include <sstream>

namespace numdiag {

namespace {

constexpr Int kMaxConductor = Int{1} << 31;

}  // namespace

NumericalSet NumericalSet::from_small_elements(const std::vector<Int>& seq,
                                               bool strict) {
  if (seq.empty() || seq.front() != 0) {
    throw DomainError(ErrorCode::NotStartingAtZero);
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] <= seq[i - 1]) {
      throw DomainError(ErrorCode::NotStrictlyIncreasing);
    }
  }
  if (seq.back() > kMaxConductor) {
    throw DomainError(ErrorCode::Overflow, "conductor exceeds 2^31");
  }

  // The true conductor is the start of the maximal co-final run of
  // consecutive entries. Everything in that run past its first entry is
  // redundant; a run reaching down to 0 means the set is all of N_0.
  std::size_t run = seq.size() - 1;
  while (run > 0 && seq[run - 1] == seq[run] - 1) --run;
  if (strict && run + 1 != seq.size()) {
    throw DomainError(ErrorCode::PreconditionFailed,
                      "sequence is not in canonical form");
  }
  if (seq[run] == 0) return naturals();
  std::vector<Int> small(seq.begin(), seq.begin() + run + 1);
  return NumericalSet(std::move(small));
}

NumericalSet NumericalSet::naturals() { return NumericalSet({0}); }

NumericalSet NumericalSet::ordinary(Int m) {
  if (m < 2) throw DomainError(ErrorCode::PreconditionFailed, "ordinary set needs m >= 2");
  return NumericalSet({0, m});
}

bool NumericalSet::contains(Int x) const {
  if (x < 0) return false;
  if (x >= conductor()) return true;
  return std::binary_search(small_.begin(), small_.end(), x);
}

Int NumericalSet::genus() const {
  // co(R) = n + g.
  return conductor() - element_count();
}

Int NumericalSet::multiplicity() const {
  if (!is_proper()) throw DomainError(ErrorCode::NonProperInput);
  return small_[1];
}

std::string NumericalSet::to_literal() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < small_.size(); ++i) {
    if (i) out << ',';
    out << small_[i];
  }
  return out.str();
}

std::string NumericalSet::to_display() const {
  if (!is_proper()) return "{0,->}";
  return "{" + to_literal() + ",->}";
}

NumericalSet parse_set(const std::string& text) {
  std::string body = text;
  auto strip = [&](char c) {
    while (!body.empty() && (body.front() == ' ' || body.front() == c)) body.erase(body.begin());
    while (!body.empty() && (body.back() == ' ' || body.back() == c)) body.pop_back();
  };
  strip(' ');
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw DomainError(ErrorCode::PreconditionFailed, "unbalanced braces");
    body = body.substr(1, body.size() - 2);
  }
  // Drop a trailing arrow, with or without a preceding comma.
  strip(' ');
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "->") == 0) {
    body.erase(body.size() - 2);
    strip(' ');
    if (!body.empty() && body.back() == ',') body.pop_back();
  }
  std::vector<Int> seq;
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    Int value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw DomainError(ErrorCode::PreconditionFailed, "bad set literal: " + tok);
    }
    while (pos < tok.size() && tok[pos] == ' ') ++pos;
    if (pos != tok.size()) {
      throw DomainError(ErrorCode::PreconditionFailed, "bad set literal: " + tok);
    }
    seq.push_back(value);
  }
  if (seq.empty()) throw DomainError(ErrorCode::PreconditionFailed, "empty set literal");
  return NumericalSet::from_small_elements(seq);
}

std::vector<Int> gaps(const NumericalSet& r) {
  std::vector<Int> out;
  const auto& small = r.small_elements();
  std::size_t idx = 0;
  for (Int x = 0; x < r.conductor(); ++x) {
    if (idx < small.size() && small[idx] == x) {
      ++idx;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Int frobenius(const NumericalSet& r) { return r.frobenius(); }
Int genus(const NumericalSet& r) { return r.genus(); }
Int conductor(const NumericalSet& r) { return r.conductor(); }

bool is_semigroup(const NumericalSet& r) {
  const auto& small = r.small_elements();
  const Int co = r.conductor();
  for (std::size_t i = 1; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const Int sum = small[i] + small[j];
      if (sum >= co) break;  // this and later sums are members
      if (!r.contains(sum)) return false;
    }
  }
  return true;
}

NumericalSet dual(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const Int f = r.frobenius();
  std::vector<Int> small{0};
  const auto gap_list = gaps(r);
  for (auto it = gap_list.rbegin(); it != gap_list.rend(); ++it) {
    if (*it == f) continue;
    small.push_back(f - *it);
  }
  small.push_back(r.conductor());
  return NumericalSet::from_small_elements(small);
}

bool is_symmetric(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const Int f = r.frobenius();
  for (Int a = 0; 2 * a <= f; ++a) {
    if (r.contains(a) == r.contains(f - a)) return false;
  }
  return true;
}

std::vector<Int> pseudo_frobenius(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  const auto& small = r.small_elements();
  std::vector<Int> out;
  for (Int z : gaps(r)) {
    bool ok = true;
    for (std::size_t i = 1; i < small.size() && ok; ++i) {
      ok = r.contains(z + small[i]);
    }
    if (ok) out.push_back(z);
  }
  return out;
}

Int type(const NumericalSet& r) {
  return static_cast<Int>(pseudo_frobenius(r).size());
}

bool is_pseudo_symmetric(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  return r.frobenius() % 2 == 0 && 2 * r.genus() == r.frobenius() + 2;
}

bool is_almost_symmetric(const NumericalSet& r) {
  return 2 * r.genus() == r.frobenius() + type(r);
}

bool is_minimal_generator(const NumericalSet& r, Int x) {
  if (x <= 0 || !r.contains(x)) return false;
  for (Int a = r.multiplicity(); 2 * a <= x; ++a) {
    if (r.contains(a) && r.contains(x - a)) return false;
  }
  return true;
}

std::vector<Int> minimal_generators(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  std::vector<Int> out;
  const Int bound = r.conductor() + r.multiplicity();  // x >= bound splits off m
  for (Int x = 1; x < bound; ++x) {
    if (is_minimal_generator(r, x)) out.push_back(x);
  }
  return out;
}

NumericalSet shift(const NumericalSet& r, Int element) {
  const auto& small = r.small_elements();
  auto it = std::find(small.begin(), small.end(), element);
  if (it == small.end()) throw DomainError(ErrorCode::NotAnElement);
  std::vector<Int> shifted;
  for (; it != small.end(); ++it) shifted.push_back(*it - element);
  return NumericalSet::from_small_elements(shifted);
}

NumericalSet shift_down_dual(const NumericalSet& s) {
  const NumericalSet d = dual(s);
  std::vector<Int> small{0};
  for (Int x : d.small_elements()) {
    if (x >= 1 && x - 1 > 0) small.push_back(x - 1);
  }
  return NumericalSet::from_small_elements(small);
}

InvariantReport analyze(const NumericalSet& r) {
  InvariantReport rep;
  rep.gaps = gaps(r);
  rep.genus = r.genus();
  rep.frobenius = r.frobenius();
  rep.conductor = r.conductor();
  rep.is_semigroup = is_semigroup(r);
  if (r.is_proper()) {
    rep.is_symmetric = is_symmetric(r);
    if (rep.is_semigroup) {
      rep.pseudo_frobenius = pseudo_frobenius(r);
      rep.type = static_cast<Int>(rep.pseudo_frobenius.size());
      rep.is_pseudo_symmetric = is_pseudo_symmetric(r);
      rep.is_almost_symmetric = 2 * rep.genus == rep.frobenius + rep.type;
    }
  } else {
    rep.is_symmetric = false;
  }
  return rep;
}

}  // namespace numdiag
