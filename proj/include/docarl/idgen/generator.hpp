#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docarl/core/annotation.hpp"
#include "docarl/core/document_class.hpp"
#include "docarl/idgen/name_corpus.hpp"
#include "docarl/idgen/serial.hpp"

namespace docarl {

struct GenSeed {
  std::uint64_t seed = 0;
  std::uint64_t max_count = 1;
};

/// Text drawn for realism only; never part of an annotation.
struct Decoration {
  std::string tag;
  std::string text;
};

struct DocumentRecord {
  std::string class_id;
  std::uint64_t serial = 0;
  // Region code to value, in the class field order.
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Decoration> decorations;
  Annotation annotation;

  const std::string& value(std::string_view code) const {
    for (const auto& [k, v] : values) {
      if (k == code) return v;
    }
    throw Error(Errc::NotFound, "record has no value for " + std::string(code));
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic random source with a portable bounded-integer mapping
/// (std distributions differ between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = seed;
    std::uint64_t mixed = detail::splitmix64(s);
    s ^= a * 0xD6E8FEB86659FD93ULL;
    mixed ^= detail::splitmix64(s);
    s ^= b * 0xA0761D6478BD642FULL;
    mixed ^= detail::splitmix64(s);
    return Rng(mixed);
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  template <class Container>
  const auto& pick(const Container& c) {
    return c[static_cast<std::size_t>(below(c.size()))];
  }

 private:
  std::mt19937_64 eng_;
};

/// Folds ASCII and Latin-1 supplement lowercase letters to uppercase.
inline std::string utf8_upper(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c >= 'a' && c <= 'z') {
      out.push_back(static_cast<char>(c - 32));
    } else if (c == 0xC3 && i + 1 < s.size()) {
      auto n = static_cast<unsigned char>(s[i + 1]);
      if (n >= 0xA0 && n <= 0xBE && n != 0xB7) n = static_cast<unsigned char>(n - 0x20);
      out.push_back(static_cast<char>(c));
      out.push_back(static_cast<char>(n));
      ++i;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

inline std::chrono::year_month_day random_date(Rng& rng, int first_year = 1970, int last_year = 2024) {
  using namespace std::chrono;
  const sys_days lo{year{first_year} / January / 1};
  const sys_days hi{year{last_year} / December / 31};
  const auto span = static_cast<std::uint64_t>((hi - lo).count()) + 1;
  return year_month_day{lo + days{static_cast<int>(rng.below(span))}};
}

inline std::string format_date(const std::chrono::year_month_day& d, char sep) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02u%c%02u%c%04d", static_cast<unsigned>(d.day()), sep,
                static_cast<unsigned>(d.month()), sep, static_cast<int>(d.year()));
  return buf;
}

inline std::string random_full_name(Rng& rng) {
  std::string name(rng.pick(corpus::kFirstNames));
  name += ' ';
  name += rng.pick(corpus::kLastNames);
  return name;
}

inline std::string_view hindi_gender(Gender g) { return g == Gender::Male ? "Purush" : "Mahila"; }

/// Builds the annotation from record values in the class field order.
inline Annotation annotation_from_values(std::string_view class_id,
                                         const std::vector<std::pair<std::string, std::string>>& values) {
  const auto& cls = document_class(class_id);
  Annotation ann{std::string(class_id), {}};
  for (auto code : cls.field_order) {
    const std::string* v = nullptr;
    for (const auto& [k, val] : values) {
      if (k == code) v = &val;
    }
    if (!v) throw Error(Errc::FieldCountMismatch, "missing value for " + std::string(code));
    ann.fields.push_back({std::string(code), *v});
  }
  serialize_annotation(ann);  // rejects delimiter collisions early
  return ann;
}

inline DocumentRecord generate_record(std::string_view class_id, std::uint64_t serial, const GenSeed& gen) {
  const auto& cls = document_class(class_id);
  const std::string number = format_serial(class_id, serial);
  Rng rng = Rng::derive(gen.seed, static_cast<std::uint64_t>(cls.index) + 1, serial);

  DocumentRecord rec;
  rec.class_id = std::string(cls.id);
  rec.serial = serial;
  auto set = [&](std::string_view code, std::string v) { rec.values.emplace_back(code, std::move(v)); };
  auto decorate = [&](std::string_view tag, std::string v) {
    rec.decorations.push_back({std::string(tag), std::move(v)});
  };

  if (cls.id == kAdhaar) {
    const Gender g = gender_for_serial(serial, gen.max_count);
    set("NAME", random_full_name(rng));
    set("DATE_OF_BIRTH", format_date(random_date(rng), '/'));
    set("GENDER", std::string(gender_label(g)));
    set("ADHAAR_NUMBER", number);
    decorate("NAME_HI", std::string(rng.pick(corpus::kHindiGivenNames)));
    decorate("GENDER_HI", std::string(hindi_gender(g)) + " /");
  } else if (cls.id == kDl) {
    set("DRIVING_LICENCE_NUMBER", number);
    set("DATE_OF_ISSUE", format_date(random_date(rng), '/'));
    set("VALADITY_TILL_DATE", format_date(random_date(rng), '/'));
    set("DATE_OF_BIRTH", format_date(random_date(rng), '/'));
    set("BLOOD_GROUP", std::string(rng.pick(corpus::kBloodGroups)));
    set("NAME", random_full_name(rng));
    set("FATHERS_NAME", random_full_name(rng));
    decorate("FILE_NUMBER", "F" + std::to_string(100000 + rng.below(900000)));
  } else if (cls.id == kPan) {
    const std::string name = random_full_name(rng);
    set("NAME", name);
    set("FATHERS_NAME", random_full_name(rng));
    set("PERMANENT_ACCOUNT_NUMBER", number);
    set("DATE_OF_BIRTH", format_date(random_date(rng), '/'));
    decorate("SIGNATURE", name.substr(0, name.find(' ')));
  } else if (cls.id == kPassport) {
    const std::string first(rng.pick(corpus::kFirstNames));
    const std::string last(rng.pick(corpus::kLastNames));
    set("PASSPORT_NUMBER", number);
    set("SURNAME", utf8_upper(last));
    set("GIVEN_NAME", first);
    set("DATE_OF_BIRTH", format_date(random_date(rng), '/'));
    set("GENDER", rng.below(2) == 0 ? "M" : "F");
    set("PLACE_OF_BIRTH", utf8_upper(rng.pick(corpus::kCities)));
    set("PLACE_OF_ISSUE", utf8_upper(rng.pick(corpus::kCities)));
    set("DATE_OF_ISSUE", format_date(random_date(rng), '/'));
    set("DATE_OF_EXPIRY", format_date(random_date(rng), '/'));
    decorate("COUNTRY_CODE", "IND");
    decorate("NATIONALITY", "INDIAN");
    decorate("FATHER", random_full_name(rng));
    decorate("MOTHER", random_full_name(rng));
    decorate("SPOUSE", random_full_name(rng));
    decorate("ADDRESS", std::to_string(1 + rng.below(999)) + " " + std::string(rng.pick(corpus::kLastNames)) +
                            " Road, " + std::string(rng.pick(corpus::kCities)));
  } else {
    const Gender g = gender_for_serial(serial, gen.max_count);
    set("NAME", random_full_name(rng));
    set("HUSBANDS_NAME", random_full_name(rng));
    set("VOTERCARD_NUMBER", number);
    set("GENDER", std::string(gender_label(g)));
    set("DATE_OF_BIRTH", format_date(random_date(rng), '-'));
    decorate("NAME_HI", std::string(rng.pick(corpus::kHindiGivenNames)));
    decorate("HUSBANDS_NAME_HI", std::string(rng.pick(corpus::kHindiGivenNames)));
    decorate("GENDER_HI", std::string(hindi_gender(g)) + " /");
  }

  // Keep values in field order so record and annotation agree positionally.
  std::vector<std::pair<std::string, std::string>> ordered;
  for (auto code : cls.field_order) {
    for (auto& kv : rec.values) {
      if (kv.first == code) ordered.push_back(std::move(kv));
    }
  }
  rec.values = std::move(ordered);
  rec.annotation = annotation_from_values(cls.id, rec.values);
  return rec;
}

/// Record for a caller-chosen set of values (used to reproduce fixed examples).
inline DocumentRecord make_record(std::string_view class_id, std::uint64_t serial,
                                  std::vector<std::pair<std::string, std::string>> values,
                                  std::vector<Decoration> decorations = {}) {
  DocumentRecord rec;
  rec.class_id = std::string(document_class(class_id).id);
  rec.serial = serial;
  rec.values = std::move(values);
  rec.decorations = std::move(decorations);
  rec.annotation = annotation_from_values(class_id, rec.values);
  std::vector<std::pair<std::string, std::string>> ordered;
  for (const auto& f : rec.annotation.fields) ordered.emplace_back(f.code, f.value);
  rec.values = std::move(ordered);
  return rec;
}

}  // namespace docarl
