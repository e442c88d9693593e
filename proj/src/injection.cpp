#include "fimod/injection.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fimod/scalar.hpp"

namespace fimod {

Injection::Injection(std::size_t target_size, std::vector<int> images)
: target_(target_size), images_(std::move(images))
{
  std::vector<bool> seen(target_ + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > target_)
      throw FimodError("injection image " + std::to_string(v) + " outside [" +
                       std::to_string(target_) + "]");
    if (seen[v])
      throw FimodError("injection repeats image " + std::to_string(v));
    seen[v] = true;
  }
}

Injection Injection::identity(std::size_t n)
{
  return standard_inclusion(n, n);
}

Injection Injection::standard_inclusion(std::size_t m, std::size_t n)
{
  if (m > n)
    throw FimodError("no inclusion [" + std::to_string(m) + "] -> [" + std::to_string(n) + "]");
  std::vector<int> img(m);
  for (std::size_t i = 0; i < m; ++i)
    img[i] = static_cast<int>(i + 1);
  return Injection(n, std::move(img));
}

Injection Injection::transposition(std::size_t n, std::size_t i)
{
  if (i < 1 || i + 1 > n)
    throw FimodError("transposition s_" + std::to_string(i) + " not defined on [" +
                     std::to_string(n) + "]");
  Injection t = identity(n);
  std::swap(t.images_[i - 1], t.images_[i]);
  return t;
}

bool Injection::in_image(int y) const
{
  return std::find(images_.begin(), images_.end(), y) != images_.end();
}

std::string Injection::to_string() const
{
  std::ostringstream out;
  out << images_.size() << "->" << target_ << ":[";
  for (std::size_t i = 0; i < images_.size(); ++i)
    out << (i ? "," : "") << images_[i];
  out << ']';
  return out.str();
}

Injection Injection::parse(std::string_view text)
{
  auto bad = [&] { return FimodError("malformed injection '" + std::string(text) + "'"); };
  std::size_t arrow = text.find("->");
  std::size_t colon = text.find(':');
  if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow)
    throw bad();
  auto to_num = [&](std::string_view s) {
    if (s.empty())
      throw bad();
    std::size_t v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw bad();
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  std::size_t m = to_num(text.substr(0, arrow));
  std::size_t n = to_num(text.substr(arrow + 2, colon - arrow - 2));
  std::string_view list = text.substr(colon + 1);
  if (list.size() < 2 || list.front() != '[' || list.back() != ']')
    throw bad();
  list = list.substr(1, list.size() - 2);
  std::vector<int> img;
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    img.push_back(static_cast<int>(to_num(list.substr(0, comma))));
    if (comma == std::string_view::npos)
      break;
    list = list.substr(comma + 1);
    if (list.empty())
      throw bad();
  }
  if (img.size() != m)
    throw bad();
  return Injection(n, std::move(img));
}

Injection compose(const Injection& g, const Injection& f)
{
  if (f.target_size() != g.source_size())
    throw FimodError("compose: " + g.to_string() + " after " + f.to_string());
  std::vector<int> img(f.source_size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = g(static_cast<std::size_t>(f.images()[i]));
  return Injection(g.target_size(), std::move(img));
}

std::vector<Injection> enumerate_injections(std::size_t m, std::size_t n)
{
  std::vector<Injection> out;
  if (m > n)
    return out;
  out.reserve(count_injections(m, n));
  std::vector<int> img(m);
  std::vector<bool> used(n + 1, false);
  // Depth-first over positions, values ascending: lexicographic order.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == m) {
      out.emplace_back(n, img);
      return;
    }
    for (std::size_t v = 1; v <= n; ++v) {
      if (used[v])
        continue;
      used[v] = true;
      img[pos] = static_cast<int>(v);
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t count_injections(std::size_t m, std::size_t n)
{
  if (m > n)
    return 0;
  std::size_t c = 1;
  for (std::size_t k = n - m + 1; k <= n; ++k)
    c *= k;
  return c;
}

std::size_t injection_rank(const Injection& f)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  std::vector<bool> used(n + 1, false);
  std::size_t r = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    int v = f.images()[pos];
    std::size_t smaller_free = 0;
    for (int u = 1; u < v; ++u)
      if (!used[u])
        ++smaller_free;
    // Each smaller unused value at this position heads a block of
    // completions of the remaining m - pos - 1 positions.
    r += smaller_free * count_injections(m - pos - 1, n - pos - 1);
    used[v] = true;
  }
  return r;
}

Injection sigma_extend(const Injection& f)
{
  std::vector<int> img = f.images();
  img.push_back(static_cast<int>(f.target_size() + 1));
  return Injection(f.target_size() + 1, std::move(img));
}

Injection join_map(const Injection& f, int target_slot)
{
  return join_map(f, static_cast<int>(f.source_size() + 1), target_slot);
}

Injection join_map(const Injection& f, int source_slot, int target_slot)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  if (target_slot < 1 || static_cast<std::size_t>(target_slot) > n + 1)
    throw FimodError("join_map: target slot " + std::to_string(target_slot) + " outside [" +
                     std::to_string(n + 1) + "]");
  if (source_slot < 1 || static_cast<std::size_t>(source_slot) > m + 1)
    throw FimodError("join_map: source slot " + std::to_string(source_slot) + " outside [" +
                     std::to_string(m + 1) + "]");
  std::vector<int> img;
  img.reserve(m + 1);
  for (std::size_t i = 1; i <= m + 1; ++i) {
    if (static_cast<int>(i) == source_slot) {
      img.push_back(target_slot);
      continue;
    }
    std::size_t src = static_cast<int>(i) < source_slot ? i : i - 1;
    int v = f(src);
    img.push_back(v < target_slot ? v : v + 1);
  }
  return Injection(n + 1, std::move(img));
}

Injection boundary_removal(const Injection& f, int y)
{
  if (y < 1 || static_cast<std::size_t>(y) > f.target_size())
    throw FimodError("boundary_removal: " + std::to_string(y) + " not in target of " +
                     f.to_string());
  if (f.in_image(y))
    throw FimodError("boundary_removal: " + std::to_string(y) + " is in the image of " +
                     f.to_string());
  std::vector<int> img = f.images();
  for (int& v : img)
    if (v > y)
      --v;
  return Injection(f.target_size() - 1, std::move(img));
}

Injection restrict_removing(const Injection& f, int x)
{
  if (x < 1 || static_cast<std::size_t>(x) > f.source_size())
    throw FimodError("restrict_removing: " + std::to_string(x) + " not in source of " +
                     f.to_string());
  int fx = f(static_cast<std::size_t>(x));
  std::vector<int> img;
  img.reserve(f.source_size() - 1);
  for (std::size_t i = 1; i <= f.source_size(); ++i) {
    if (static_cast<int>(i) == x)
      continue;
    int v = f(i);
    img.push_back(v > fx ? v - 1 : v);
  }
  return Injection(f.target_size() - 1, std::move(img));
}

GeneratorWord canonical_factorization(const Injection& f)
{
  std::size_t m = f.source_size();
  std::size_t n = f.target_size();
  // Coset representative: i -> f(i) on [m], complement of the image in
  // increasing order on m+1..n.
  std::vector<int> perm = f.images();
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (!f.in_image(v))
      perm.push_back(v);

  GeneratorWord w{m, n, {}};
  // perm = perm' o s_a with a the smallest right descent; recurse on perm'.
  for (;;) {
    std::size_t a = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (perm[i - 1] > perm[i]) {
        a = i;
        break;
      }
    if (a == 0)
      break;
    w.transpositions.push_back(a);
    std::swap(perm[a - 1], perm[a]);
  }
  return w;
}

Injection evaluate_word(const GeneratorWord& w)
{
  Injection f = Injection::standard_inclusion(w.source_size, w.target_size);
  for (std::size_t a : w.transpositions)
    f = compose(Injection::transposition(w.target_size, a), f);
  return f;
}

}  // namespace fimod
