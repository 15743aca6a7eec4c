#include "algoart/catalog.hpp"

#include <set>
#include <utility>

#include "algoart/errors.hpp"
#include "algoart/text_format.hpp"

namespace algoart::catalog {

namespace {

struct AttributeInfo {
    Attribute attr;
    std::string_view name;
    std::string_view glyph;
};

constexpr AttributeInfo kAttributeTable[kAttributeCount] = {
    {Attribute::encodage, "Encodage", "⇄"},
    {Attribute::systeme, "Système", "⚙"},
    {Attribute::mathematiques, "Mathématiques", "∑"},
    {Attribute::arbre, "Arbre", "⋔"},
    {Attribute::deep_learning, "DeepLearning", "◉"},
    {Attribute::interactivite, "Interactivité", "☝"},
    {Attribute::internet, "Internet", "@"},
    {Attribute::plateforme, "Plateforme", "▦"},
};

constexpr std::string_view kChapterNames[4] = {"dessin et code", "image et temps", "dit et écrit",
                                               "matériel et externalité"};

}  // namespace

std::string_view attribute_name(Attribute a) { return kAttributeTable[static_cast<std::size_t>(a)].name; }

std::string_view attribute_glyph(Attribute a) { return kAttributeTable[static_cast<std::size_t>(a)].glyph; }

std::optional<Attribute> parse_attribute(std::string_view name) {
    name = trim(name);
    if (name == "Deep Learning") {
        return Attribute::deep_learning;
    }
    for (const auto& info : kAttributeTable) {
        if (info.name == name) {
            return info.attr;
        }
    }
    return std::nullopt;
}

AttributeSet::AttributeSet(std::initializer_list<Attribute> attrs) {
    for (auto a : attrs) {
        insert(a);
    }
}

std::size_t AttributeSet::size() const {
    std::size_t n = 0;
    for (auto a : kAllAttributes) {
        n += contains(a) ? 1 : 0;
    }
    return n;
}

std::vector<Attribute> AttributeSet::items() const {
    std::vector<Attribute> out;
    for (auto a : kAllAttributes) {
        if (contains(a)) {
            out.push_back(a);
        }
    }
    return out;
}

std::string_view chapter_name(Chapter c) { return kChapterNames[static_cast<std::size_t>(c)]; }

std::optional<Chapter> parse_chapter(std::string_view name) {
    name = trim(name);
    for (auto c : kChapterOrder) {
        if (chapter_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Record files

namespace {

class BlockBuilder {
public:
    void start(std::size_t line) {
        active_ = true;
        start_line_ = line;
        entry_ = CatalogEntry{};
        seen_.clear();
        in_description_ = false;
    }

    bool active() const { return active_; }

    void key_value(std::size_t ln, std::string_view key, std::string_view value) {
        if (!seen_.insert(std::string(key)).second) {
            throw ParseError(ln, "duplicate key '" + std::string(key) + "'");
        }
        in_description_ = false;
        if (key == "title") {
            entry_.title = std::string(value);
        } else if (key == "artist") {
            entry_.artist = std::string(value);
        } else if (key == "year") {
            long long y = 0;
            if (!parse_int(value, y) || y < 1950 || y > 2100) {
                throw ParseError(ln, "year must be an integer in [1950, 2100], got '" + std::string(value) + "'");
            }
            entry_.year = static_cast<int>(y);
        } else if (key == "chapter") {
            auto c = parse_chapter(value);
            if (!c) {
                throw ParseError(ln, "unknown chapter '" + std::string(value) + "'");
            }
            entry_.chapter = *c;
        } else if (key == "attrs") {
            for (auto name : split_trimmed(value, ',')) {
                auto a = parse_attribute(name);
                if (!a) {
                    throw ParseError(ln, "unknown attribute '" + std::string(name) + "'");
                }
                entry_.attributes.insert(*a);
            }
        } else if (key == "algo_type") {
            entry_.algo_type = std::string(value);
        } else if (key == "description") {
            entry_.description = std::string(value);
            in_description_ = true;
        } else {
            throw ParseError(ln, "unknown key '" + std::string(key) + "'");
        }
    }

    void continuation(std::size_t ln, std::string_view text) {
        if (!in_description_) {
            throw ParseError(ln, "indented continuation line outside a description");
        }
        if (!entry_.description.empty()) {
            entry_.description += '\n';
        }
        entry_.description += std::string(text);
    }

    CatalogEntry finish() {
        for (const char* required : {"title", "artist", "year", "chapter"}) {
            if (!seen_.count(required)) {
                throw ParseError(start_line_, std::string("record is missing '") + required + "'");
            }
        }
        if (entry_.title.empty() || entry_.artist.empty()) {
            throw ParseError(start_line_, "title and artist must not be empty");
        }
        active_ = false;
        return std::move(entry_);
    }

    std::size_t start_line() const { return start_line_; }

private:
    bool active_ = false;
    bool in_description_ = false;
    std::size_t start_line_ = 0;
    CatalogEntry entry_;
    std::set<std::string> seen_;
};

}  // namespace

Catalog parse_catalog(std::string_view text) {
    Catalog cat;
    std::set<std::pair<std::string, std::string>> keys;
    BlockBuilder block;

    auto close_block = [&] {
        if (!block.active()) {
            return;
        }
        const std::size_t start = block.start_line();
        auto entry = block.finish();
        if (!keys.emplace(entry.title, entry.artist).second) {
            throw ParseError(start, "duplicate entry '" + entry.title + "' by " + entry.artist);
        }
        cat.entries.push_back(std::move(entry));
    };

    const auto lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t ln = idx + 1;
        const std::string_view raw = lines[idx];
        const std::string_view line = trim(raw);
        if (line.empty()) {
            close_block();
            continue;
        }
        if (line.front() == '#') {
            continue;
        }
        if (raw.front() == ' ' || raw.front() == '\t') {
            if (!block.active()) {
                throw ParseError(ln, "indented line outside a record");
            }
            block.continuation(ln, line);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(ln, "expected 'key: value'");
        }
        if (!block.active()) {
            block.start(ln);
        }
        block.key_value(ln, trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
    }
    close_block();
    return cat;
}

std::string emit_records(const Catalog& cat) {
    std::string out;
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        const auto& e = cat.entries[i];
        if (i > 0) {
            out += '\n';
        }
        out += "title: " + e.title + '\n';
        out += "artist: " + e.artist + '\n';
        out += "year: " + std::to_string(e.year) + '\n';
        out += "chapter: " + std::string(chapter_name(e.chapter)) + '\n';
        if (!e.attributes.empty()) {
            out += "attrs: ";
            bool first = true;
            for (auto a : e.attributes.items()) {
                out += first ? "" : ", ";
                out += attribute_name(a);
                first = false;
            }
            out += '\n';
        }
        if (!e.algo_type.empty()) {
            out += "algo_type: " + e.algo_type + '\n';
        }
        if (!e.description.empty()) {
            const auto desc_lines = split_lines(e.description);
            out += "description: " + std::string(desc_lines.front()) + '\n';
            for (std::size_t k = 1; k < desc_lines.size(); ++k) {
                out += "  " + std::string(desc_lines[k]) + '\n';
            }
        }
    }
    return out;
}

Catalog filter_catalog(const Catalog& cat, const CatalogFilter& filter) {
    Catalog out;
    for (const auto& e : cat.entries) {
        if (!e.attributes.contains_all(filter.attributes)) {
            continue;
        }
        if (filter.chapter && e.chapter != *filter.chapter) {
            continue;
        }
        if (filter.year_min && e.year < *filter.year_min) {
            continue;
        }
        if (filter.year_max && e.year > *filter.year_max) {
            continue;
        }
        out.entries.push_back(e);
    }
    return out;
}

std::string emit_markdown(const Catalog& cat, std::string_view title) {
    std::string out = "# " + std::string(title) + '\n';
    for (auto chapter : kChapterOrder) {
        bool heading = false;
        for (const auto& e : cat.entries) {
            if (e.chapter != chapter) {
                continue;
            }
            if (!heading) {
                out += "\n## " + std::string(chapter_name(chapter)) + '\n';
                heading = true;
            }
            out += "\n### " + e.title + " — " + e.artist + " (" + std::to_string(e.year) + ")\n\n";
            out += "Glyphs:";
            if (e.attributes.empty()) {
                out += " none";
            }
            for (auto a : e.attributes.items()) {
                out += ' ';
                out += attribute_glyph(a);
            }
            out += '\n';
            out += "\nAlgo-type: " + (e.algo_type.empty() ? std::string("n/a") : e.algo_type) + '\n';
            if (!e.description.empty()) {
                out += '\n';
                for (auto l : split_lines(e.description)) {
                    out += std::string(l) + '\n';
                }
            }
        }
    }
    return out;
}

}  // namespace algoart::catalog
