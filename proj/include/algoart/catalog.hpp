#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algoart::catalog {

/// The eight algorithmic attributes, in canonical order.
enum class Attribute : std::uint8_t {
    encodage,
    systeme,
    mathematiques,
    arbre,
    deep_learning,
    interactivite,
    internet,
    plateforme,
};

inline constexpr std::size_t kAttributeCount = 8;

inline constexpr std::array<Attribute, kAttributeCount> kAllAttributes = {
    Attribute::encodage,      Attribute::systeme,       Attribute::mathematiques, Attribute::arbre,
    Attribute::deep_learning, Attribute::interactivite, Attribute::internet,      Attribute::plateforme,
};

std::string_view attribute_name(Attribute a);

/// One Unicode code point per attribute (UTF-8 encoded).
std::string_view attribute_glyph(Attribute a);

/// Accepts the canonical names ("Deep Learning" is also accepted).
std::optional<Attribute> parse_attribute(std::string_view name);

/// Subset of the eight attributes, iterated in canonical order.
class AttributeSet {
public:
    AttributeSet() = default;
    AttributeSet(std::initializer_list<Attribute> attrs);

    void insert(Attribute a) { bits_ |= bit(a); }
    bool contains(Attribute a) const { return (bits_ & bit(a)) != 0; }
    bool contains_all(AttributeSet other) const { return (bits_ & other.bits_) == other.bits_; }
    bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    std::vector<Attribute> items() const;

    friend bool operator==(AttributeSet, AttributeSet) = default;

private:
    static std::uint8_t bit(Attribute a) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a)); }
    std::uint8_t bits_ = 0;
};

enum class Chapter : std::uint8_t { dessin_et_code, image_et_temps, dit_et_ecrit, materiel_et_externalite };

inline constexpr std::array<Chapter, 4> kChapterOrder = {
    Chapter::dessin_et_code, Chapter::image_et_temps, Chapter::dit_et_ecrit, Chapter::materiel_et_externalite};

std::string_view chapter_name(Chapter c);
std::optional<Chapter> parse_chapter(std::string_view name);

struct CatalogEntry {
    std::string title;
    std::string artist;
    int year = 0;
    Chapter chapter = Chapter::dessin_et_code;
    AttributeSet attributes;
    std::string algo_type;
    std::string description;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// Blank-line separated blocks of `key: value` lines. Keys: title, artist,
/// year, chapter, attrs (comma separated), algo_type, description (indented
/// lines continue it). `#` starts a comment line. Errors are ParseError with
/// line numbers.
Catalog parse_catalog(std::string_view text);

/// Record file that parse_catalog reads back to an equal catalog.
std::string emit_records(const Catalog& cat);

struct CatalogFilter {
    AttributeSet attributes;  ///< entry must carry all of them
    std::optional<Chapter> chapter;
    std::optional<int> year_min;
    std::optional<int> year_max;
};

/// Entries matching every given predicate, original order preserved.
Catalog filter_catalog(const Catalog& cat, const CatalogFilter& filter);

inline constexpr std::string_view kDefaultTitle = "Inventaire des oeuvres algorithmiques";

/// H1 title, one H2 per non-empty chapter in canonical order, and per entry
/// an H3 heading with title, artist and year, a glyph line, an algo-type line and the
/// description paragraph.
std::string emit_markdown(const Catalog& cat, std::string_view title = kDefaultTitle);

}  // namespace algoart::catalog
