#include "torelli/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace torelli {

namespace {

bool is_odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

void require_same_genus(int a, int b) {
  if (a != b) throw std::invalid_argument("genus mismatch");
}

}  // namespace

HomologyClass::HomologyClass(int genus) : genus_(genus), torsion_(0) {
  if (genus < 1) throw std::invalid_argument("HomologyClass: genus must be >= 1");
  free_.resize(genus - 1);
}

HomologyClass::HomologyClass(int genus, std::vector<mpz_class> free_part, int torsion)
    : genus_(genus), free_(std::move(free_part)), torsion_(torsion) {
  if (genus < 1) throw std::invalid_argument("HomologyClass: genus must be >= 1");
  if (static_cast<int>(free_.size()) != genus - 1)
    throw std::invalid_argument("HomologyClass: free part must have g-1 entries");
  if (torsion != 0 && torsion != 1)
    throw std::invalid_argument("HomologyClass: torsion bit must be 0 or 1");
}

HomologyClass HomologyClass::canonicalize(const std::vector<mpz_class>& raw) {
  const int g = static_cast<int>(raw.size());
  if (g < 1) throw std::invalid_argument("canonicalize: empty vector");
  std::vector<mpz_class> free_part(g - 1);
  for (int j = 0; j + 1 < g; ++j) free_part[j] = raw[j] - raw[g - 1];
  return HomologyClass(g, std::move(free_part), is_odd(raw[g - 1]) ? 1 : 0);
}

HomologyClass HomologyClass::basis(int genus, int i) {
  if (i < 1 || i > genus) throw std::invalid_argument("basis: index out of range");
  std::vector<mpz_class> raw(genus);
  raw[i - 1] = 1;
  return canonicalize(raw);
}

HomologyClass HomologyClass::full_sum(int genus) {
  std::vector<mpz_class> raw(genus, mpz_class(1));
  return canonicalize(raw);
}

std::vector<mpz_class> HomologyClass::raw_lift() const {
  std::vector<mpz_class> raw(genus_);
  for (int j = 0; j + 1 < genus_; ++j) raw[j] = free_[j] + torsion_;
  raw[genus_ - 1] = torsion_;
  return raw;
}

HomologyClass HomologyClass::negated() const {
  HomologyClass out(genus_);
  for (int j = 0; j + 1 < genus_; ++j) out.free_[j] = -free_[j];
  out.torsion_ = torsion_;  // -c = c since 2c = 0
  return out;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
  require_same_genus(a.genus_, b.genus_);
  HomologyClass out(a.genus_);
  for (int j = 0; j + 1 < a.genus_; ++j) out.free_[j] = a.free_[j] + b.free_[j];
  out.torsion_ = a.torsion_ ^ b.torsion_;
  return out;
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
  return a + b.negated();
}

HomologyClass operator*(const mpz_class& k, const HomologyClass& x) {
  HomologyClass out(x.genus_);
  for (int j = 0; j + 1 < x.genus_; ++j) out.free_[j] = k * x.free_[j];
  out.torsion_ = (x.torsion_ != 0 && is_odd(k)) ? 1 : 0;
  return out;
}

int mod2_pairing(const HomologyClass& x, const HomologyClass& y) {
  require_same_genus(x.genus(), y.genus());
  const auto rx = x.raw_lift();
  const auto ry = y.raw_lift();
  int acc = 0;
  for (int i = 0; i < x.genus(); ++i)
    if (is_odd(rx[i]) && is_odd(ry[i])) acc ^= 1;
  return acc;
}

std::string to_string(const HomologyClass& x) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const mpz_class& coeff, const std::string& name) {
    if (coeff == 0) return;
    const bool neg = coeff < 0;
    const mpz_class mag = abs(coeff);
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << name;
  };
  for (int j = 0; j + 1 < x.genus(); ++j)
    emit(x.free_part()[j], "c" + std::to_string(j + 1));
  emit(x.torsion(), "c");
  if (first) os << '0';
  return os.str();
}

HomologyAutomorphism::HomologyAutomorphism(std::vector<HomologyClass> images)
    : genus_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (genus_ < 1) throw std::invalid_argument("HomologyAutomorphism: needs g >= 1 images");
  for (const auto& im : images_)
    if (im.genus() != genus_)
      throw std::invalid_argument("HomologyAutomorphism: image genus mismatch");
  HomologyClass sum(genus_);
  for (const auto& im : images_) sum = sum + im;
  if (!(sum == HomologyClass::full_sum(genus_)))
    throw std::invalid_argument("HomologyAutomorphism: images do not fix c");
  for (int i = 0; i < genus_; ++i)
    for (int j = i; j < genus_; ++j)
      if (mod2_pairing(images_[i], images_[j]) != (i == j ? 1 : 0))
        throw std::invalid_argument("HomologyAutomorphism: mod 2 form not preserved");
  const mpz_class d = overline().det();
  if (d != 1 && d != -1)
    throw std::invalid_argument("HomologyAutomorphism: induced matrix not unimodular");
}

HomologyAutomorphism HomologyAutomorphism::identity(int genus) {
  std::vector<HomologyClass> images;
  images.reserve(genus);
  for (int i = 1; i <= genus; ++i) images.push_back(HomologyClass::basis(genus, i));
  return HomologyAutomorphism(std::move(images));
}

HomologyClass HomologyAutomorphism::apply(const HomologyClass& x) const {
  require_same_genus(genus_, x.genus());
  HomologyClass out(genus_);
  for (int i = 0; i + 1 < genus_; ++i) out = out + x.free_part()[i] * images_[i];
  if (x.torsion() != 0) out = out + HomologyClass::full_sum(genus_);  // L(c) = c
  return out;
}

HomologyAutomorphism compose(const HomologyAutomorphism& a, const HomologyAutomorphism& b) {
  require_same_genus(a.genus(), b.genus());
  std::vector<HomologyClass> images;
  images.reserve(a.genus());
  for (const auto& im : b.images()) images.push_back(a.apply(im));
  return HomologyAutomorphism(std::move(images));
}

HomologyAutomorphism HomologyAutomorphism::inverse() const {
  const IntMatrix ainv = overline().inverse();
  // Torsion bits of the inverse solve t' = Ainv^T t over Z/2.
  std::vector<int> t(genus_ - 1);
  for (int i = 0; i + 1 < genus_; ++i) t[i] = images_[i].torsion();
  std::vector<HomologyClass> images;
  images.reserve(genus_);
  HomologyClass partial_sum(genus_);
  for (int i = 0; i + 1 < genus_; ++i) {
    std::vector<mpz_class> free_part(genus_ - 1);
    for (int r = 0; r + 1 < genus_; ++r) free_part[r] = ainv.at(r, i);
    int bit = 0;
    for (int j = 0; j + 1 < genus_; ++j)
      if (t[j] != 0 && mpz_odd_p(ainv.at(j, i).get_mpz_t())) bit ^= 1;
    images.emplace_back(genus_, std::move(free_part), bit);
    partial_sum = partial_sum + images.back();
  }
  images.push_back(HomologyClass::full_sum(genus_) - partial_sum);
  return HomologyAutomorphism(std::move(images));
}

HomologyAutomorphism HomologyAutomorphism::pow(const mpz_class& e) const {
  if (e == 0) return identity(genus_);
  HomologyAutomorphism base = e < 0 ? inverse() : *this;
  mpz_class n = abs(e);
  HomologyAutomorphism acc = identity(genus_);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    acc = compose(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), b)) acc = compose(acc, base);
  }
  return acc;
}

bool HomologyAutomorphism::is_identity() const {
  for (int i = 1; i <= genus_; ++i)
    if (!(images_[i - 1] == HomologyClass::basis(genus_, i))) return false;
  return true;
}

IntMatrix HomologyAutomorphism::overline() const {
  IntMatrix m(genus_ - 1);
  for (int col = 0; col + 1 < genus_; ++col)
    for (int row = 0; row + 1 < genus_; ++row)
      m.at(row, col) = images_[col].free_part()[row];
  return m;
}

bool HomologyAutomorphism::is_mod2_trivial() const {
  for (int i = 1; i <= genus_; ++i) {
    const HomologyClass diff = images_[i - 1] - HomologyClass::basis(genus_, i);
    if (diff.torsion() != 0) return false;
    for (const auto& coeff : diff.free_part())
      if (is_odd(coeff)) return false;
  }
  return true;
}

HomologyAutomorphism twist_action(const std::vector<int>& index_set, int direction, int genus) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("twist_action: direction must be +-1");
  if (index_set.size() < 2 || index_set.size() % 2 != 0)
    throw std::invalid_argument("twist_action: index set must have even size >= 2");
  if (!std::is_sorted(index_set.begin(), index_set.end()) ||
      std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end())
    throw std::invalid_argument("twist_action: index set must be strictly increasing");
  if (index_set.front() < 1 || index_set.back() > genus)
    throw std::invalid_argument("twist_action: index out of range");

  std::vector<mpz_class> a(genus);  // raw coordinates of a_I
  for (int i : index_set) a[i - 1] = 1;
  std::vector<HomologyClass> images;
  images.reserve(genus);
  for (int k = 1; k <= genus; ++k) {
    std::vector<mpz_class> raw(genus);
    raw[k - 1] = 1;
    int lambda = 0;
    for (std::size_t t = 0; t < index_set.size(); ++t)
      if (index_set[t] == k) lambda = (t % 2 == 0) ? 1 : -1;
    if (lambda != 0)
      for (int j = 0; j < genus; ++j) raw[j] += direction * lambda * a[j];
    images.push_back(HomologyClass::canonicalize(raw));
  }
  return HomologyAutomorphism(std::move(images));
}

HomologyAutomorphism slide_action(int i, int j, int genus) {
  if (i < 1 || i > genus || j < 1 || j > genus || i == j)
    throw std::invalid_argument("slide_action: bad indices");
  std::vector<HomologyClass> images;
  images.reserve(genus);
  for (int k = 1; k <= genus; ++k) {
    std::vector<mpz_class> raw(genus);
    raw[k - 1] = 1;
    if (k == i) raw[k - 1] = -1;
    if (k == j) raw[i - 1] += 2;
    images.push_back(HomologyClass::canonicalize(raw));
  }
  return HomologyAutomorphism(std::move(images));
}

std::string to_string(const HomologyAutomorphism& a) {
  std::ostringstream os;
  for (int i = 1; i <= a.genus(); ++i) {
    if (i > 1) os << "; ";
    os << 'c' << i << " -> " << to_string(a.images()[i - 1]);
  }
  return os.str();
}

}  // namespace torelli
