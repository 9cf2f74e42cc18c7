#include "cpt/arcs.hpp"

#include <algorithm>
#include <sstream>

namespace cpt {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

std::string Arc::to_string() const {
  if (start == end && start_closed && end_closed)
    return "{" + rational_to_string(start) + "}";
  std::ostringstream out;
  out << (start_closed ? '[' : '(') << rational_to_string(start) << ","
      << rational_to_string(end) << (end_closed ? ']' : ')');
  return out.str();
}

ArcSet ArcSet::full() {
  ArcSet s;
  s.parts_.push_back({kZero, kOne, true, false});
  return s;
}

ArcSet ArcSet::point(const Rational& p) {
  ArcSet s;
  Rational q = mod1(p);
  s.parts_.push_back({q, q, true, true});
  return s;
}

ArcSet ArcSet::segment(const Rational& lo, const Rational& hi, bool lo_closed,
                       bool hi_closed) {
  if (lo < kZero || hi > kOne || lo > hi)
    throw std::invalid_argument("ArcSet::segment: need 0 <= lo <= hi <= 1");
  if (lo == hi) {
    if (lo_closed && hi_closed) return point(lo);
    return empty();
  }
  std::vector<Piece> out;
  normalize_into(out, lo == kOne ? kZero : lo, hi - lo, lo_closed, hi_closed);
  return canonicalize(std::move(out));
}

ArcSet ArcSet::circular(const Rational& start, const Rational& end, bool start_closed,
                        bool end_closed) {
  Rational s = mod1(start), e = mod1(end);
  if (s == e && start_closed && end_closed) return point(s);
  Rational len = s == e ? kOne : mod1(e - s);
  std::vector<Piece> out;
  normalize_into(out, s, len, start_closed, end_closed);
  return canonicalize(std::move(out));
}

// Emits the arc starting at lo in [0, 1) with the given length, split at the
// seam; an endpoint landing exactly on the seam becomes the point {0}.
void ArcSet::normalize_into(std::vector<Piece>& out, Rational lo, Rational len,
                            bool lo_closed, bool hi_closed) {
  if (len == kZero) {
    if (lo_closed && hi_closed) out.push_back({lo, lo, true, true});
    return;
  }
  Rational hi = lo + len;
  if (hi < kOne) {
    out.push_back({lo, hi, lo_closed, hi_closed});
    return;
  }
  out.push_back({lo, kOne, lo_closed, false});
  if (hi == kOne) {
    if (hi_closed) out.push_back({kZero, kZero, true, true});
    return;
  }
  out.push_back({kZero, hi - kOne, true, hi_closed});
}

ArcSet ArcSet::canonicalize(std::vector<Piece> pieces) {
  std::vector<Piece> live;
  for (const auto& p : pieces) {
    if (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) continue;
    live.push_back(p);
  }
  std::sort(live.begin(), live.end(), [](const Piece& a, const Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed start first
    return a.hi < b.hi;
  });
  ArcSet s;
  for (const auto& p : live) {
    if (!s.parts_.empty()) {
      Piece& cur = s.parts_.back();
      bool joined = p.lo < cur.hi ||
                    (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
      if (joined) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    s.parts_.push_back(p);
  }
  return s;
}

bool ArcSet::is_full() const {
  return parts_.size() == 1 && parts_[0].lo == kZero && parts_[0].hi == kOne &&
         parts_[0].lo_closed;
}

bool ArcSet::contains(const Rational& pos) const {
  Rational q = mod1(pos);
  for (const auto& p : parts_) {
    if (q < p.lo) return false;  // parts are sorted
    bool above = q > p.lo || (q == p.lo && p.lo_closed);
    bool below = q < p.hi || (q == p.hi && p.hi_closed);
    if (above && below) return true;
  }
  return false;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
  std::vector<Piece> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return canonicalize(std::move(all));
}

ArcSet ArcSet::complement() const {
  std::vector<Piece> out;
  Rational pos = kZero;
  bool pos_closed = true;  // 0 belongs to the complement until covered
  for (const auto& p : parts_) {
    bool nonempty = pos < p.lo || (pos == p.lo && pos_closed && !p.lo_closed);
    if (nonempty) out.push_back({pos, p.lo, pos_closed, !p.lo_closed});
    pos = p.hi;
    pos_closed = !p.hi_closed;
  }
  if (pos < kOne) out.push_back({pos, kOne, pos_closed, false});
  return canonicalize(std::move(out));
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  return complement().unite(other.complement()).complement();
}

Rational ArcSet::measure() const {
  Rational total(0);
  for (const auto& p : parts_) total += p.hi - p.lo;
  return total;
}

int ArcSet::components() const {
  if (parts_.empty()) return 0;
  int n = static_cast<int>(parts_.size());
  if (n >= 2 && parts_.back().hi == kOne && parts_.front().lo == kZero &&
      parts_.front().lo_closed)
    return n - 1;  // the last arc continues through the seam into the first
  return n;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_)
    out.push_back({p.lo, p.hi, p.lo_closed, p.hi_closed});
  return out;
}

std::string ArcSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::vector<Arc> list = arcs();
  std::ostringstream out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out << " u ";
    out << list[i].to_string();
  }
  return out.str();
}

std::string CircleSymmetry::to_string() const {
  std::ostringstream out;
  out << "e^(" << rational_to_string(t) << ").";
  out << (v == 1 ? "1" : "(-1)");
  return out.str();
}

ArcSet arc_apply_impl(const ArcSet& s, const Rational& t, int v) {
  std::vector<ArcSet::Piece> out;
  for (const auto& p : s.parts_) {
    Rational len = p.hi - p.lo;
    if (v == 1) {
      ArcSet::normalize_into(out, mod1(p.lo + t), len, p.lo_closed, p.hi_closed);
    } else {
      // reflection d -> t - d maps [lo, hi] onto [t - hi, t - lo], flags swapped
      ArcSet::normalize_into(out, mod1(t - p.hi), len, p.hi_closed, p.lo_closed);
    }
  }
  return ArcSet::canonicalize(std::move(out));
}

ArcSet arc_apply(const CircleSymmetry& g, const ArcSet& s) {
  return arc_apply_impl(s, g.t, g.v);
}

}  // namespace cpt
