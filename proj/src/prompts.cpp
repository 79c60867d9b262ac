#include "conextract/prompts.hpp"

#include "conextract/util.hpp"

#include <array>

namespace conextract::prompts {

namespace {

constexpr const char* kDomainClause =
    "related to the domains of Computer Science, Control, and Information Technology";

constexpr const char* kExtractingSystem =
    "You are a helpful, respectful and honest assistant for extracting keyphrases "
    "from the provided document.";

constexpr const char* kExpertSystem =
    "You are an ontology expert in extracting keyphrases from the document.";

constexpr const char* kTaskSystem =
    "You are an expert in extracting keyphrases from documents. Keyphrases are "
    "important multi- or single noun phrases that cover main topics of the document.";

std::string request_line(const PromptTemplate& tpl) {
    std::string term = to_string(tpl.search_term);
    // The task-context wording capitalizes the default search term.
    if (tpl.name == "ZS-TaskContext" && tpl.search_term == SearchTerm::keyphrases)
        term = "Keyphrases";
    std::string line = "Please give me the " + term;
    if (tpl.domain_clause) line += " " + *tpl.domain_clause;
    line += " that are present in this document and separate them with commas:";
    return line;
}

// Document appended after the request, one newline between.
std::string request_with_document(const PromptTemplate& tpl, const corpus::Document& doc) {
    return request_line(tpl) + "\n" + doc.text;
}

// "I have the following document: ..." preamble followed by the request.
std::string preamble_with_document(const PromptTemplate& tpl, const std::string& doc_text) {
    return "I have the following document: " + doc_text + "\n" + request_line(tpl);
}

std::string join_gold(const std::vector<std::string>& keyphrases) {
    std::string out;
    for (const std::string& kp : keyphrases) {
        if (!out.empty()) out += ", ";
        out += kp;
    }
    return out;
}

} // namespace

std::string role_name(Role role) {
    switch (role) {
        case Role::system: return "system";
        case Role::user: return "user";
        case Role::assistant: return "assistant";
    }
    throw Error("invalid role");
}

std::string to_string(SearchTerm term) {
    switch (term) {
        case SearchTerm::keywords: return "keywords";
        case SearchTerm::keyphrases: return "keyphrases";
        case SearchTerm::concepts: return "concepts";
        case SearchTerm::entities: return "entities";
        case SearchTerm::topics: return "topics";
    }
    throw Error("invalid search term");
}

SearchTerm parse_search_term(const std::string& name) {
    if (name == "keywords") return SearchTerm::keywords;
    if (name == "keyphrases") return SearchTerm::keyphrases;
    if (name == "concepts") return SearchTerm::concepts;
    if (name == "entities") return SearchTerm::entities;
    if (name == "topics") return SearchTerm::topics;
    throw ConfigError("unknown search term: " + name);
}

std::string to_string(FewShotStrategy strategy) {
    switch (strategy) {
        case FewShotStrategy::fixed: return "fixed";
        case FewShotStrategy::random: return "random";
        case FewShotStrategy::closest: return "closest";
    }
    throw Error("invalid few-shot strategy");
}

FewShotStrategy parse_strategy(const std::string& name) {
    if (name == "fixed") return FewShotStrategy::fixed;
    if (name == "random") return FewShotStrategy::random;
    if (name == "closest") return FewShotStrategy::closest;
    throw ConfigError("unknown few-shot strategy: " + name);
}

std::vector<std::string> list_templates() {
    return {
        "ZS-Keywords",  "ZS-Keyphrases", "ZS-Concepts",        "ZS-Entities",
        "ZS-Topics",    "ZS-Domain",     "ZS-ExtractingContext", "ZS-ExpertContext",
        "ZS-TaskContext", "FS-Fixed",    "FS-Random",          "FS-Closest",
    };
}

PromptTemplate get_template(const std::string& name) {
    PromptTemplate tpl;
    tpl.name = name;
    if (name == "ZS-Keywords") {
        tpl.search_term = SearchTerm::keywords;
    } else if (name == "ZS-Keyphrases") {
        tpl.search_term = SearchTerm::keyphrases;
    } else if (name == "ZS-Concepts") {
        tpl.search_term = SearchTerm::concepts;
    } else if (name == "ZS-Entities") {
        tpl.search_term = SearchTerm::entities;
    } else if (name == "ZS-Topics") {
        tpl.search_term = SearchTerm::topics;
    } else if (name == "ZS-Domain") {
        tpl.domain_clause = kDomainClause;
    } else if (name == "ZS-ExtractingContext") {
        tpl.system_text = kExtractingSystem;
    } else if (name == "ZS-ExpertContext") {
        tpl.system_text = kExpertSystem;
    } else if (name == "ZS-TaskContext") {
        tpl.system_text = kTaskSystem;
    } else if (name == "FS-Fixed") {
        tpl.fs_strategy = FewShotStrategy::fixed;
    } else if (name == "FS-Random") {
        tpl.fs_strategy = FewShotStrategy::random;
    } else if (name == "FS-Closest") {
        tpl.fs_strategy = FewShotStrategy::closest;
    } else {
        throw ConfigError("unknown prompt template: " + name);
    }
    return tpl;
}

PromptInstance build_zero_shot(const PromptTemplate& tpl, const corpus::Document& doc) {
    if (tpl.is_few_shot())
        throw Error("build_zero_shot: template '" + tpl.name + "' is few-shot");

    PromptInstance instance;
    instance.template_name = tpl.name;
    instance.target_doc_id = doc.id;
    if (tpl.system_text)
        instance.messages.push_back({Role::system, *tpl.system_text});

    // Context templates carry the document in the preamble form; the plain
    // ones append it after the request.
    if (tpl.system_text)
        instance.messages.push_back({Role::user, preamble_with_document(tpl, doc.text)});
    else
        instance.messages.push_back({Role::user, request_with_document(tpl, doc)});
    return instance;
}

PromptInstance build_few_shot(const PromptTemplate& tpl, const corpus::Document& doc,
                              const std::vector<corpus::Entry>& examples) {
    if (!tpl.is_few_shot())
        throw Error("build_few_shot: template '" + tpl.name + "' is zero-shot");
    if (!tpl.fs_n)
        throw Error("build_few_shot: template '" + tpl.name + "' has no example count");
    if (static_cast<int>(examples.size()) != *tpl.fs_n)
        throw Error("build_few_shot: expected " + std::to_string(*tpl.fs_n) +
                    " examples, got " + std::to_string(examples.size()));

    PromptInstance instance;
    instance.template_name = tpl.name;
    instance.target_doc_id = doc.id;
    if (tpl.system_text)
        instance.messages.push_back({Role::system, *tpl.system_text});
    for (const corpus::Entry& example : examples) {
        instance.messages.push_back(
            {Role::user, preamble_with_document(tpl, example.doc.text)});
        instance.messages.push_back({Role::assistant, join_gold(example.gold.keyphrases)});
    }
    instance.messages.push_back({Role::user, request_with_document(tpl, doc)});
    return instance;
}

nlohmann::json template_to_json(const PromptTemplate& tpl) {
    nlohmann::json j{{"name", tpl.name}, {"search_term", to_string(tpl.search_term)}};
    if (tpl.system_text) j["system_text"] = *tpl.system_text;
    if (tpl.domain_clause) j["domain_clause"] = *tpl.domain_clause;
    if (tpl.fs_strategy) j["fs_strategy"] = to_string(*tpl.fs_strategy);
    if (tpl.fs_n) j["fs_n"] = *tpl.fs_n;
    return j;
}

nlohmann::json messages_to_json(const std::vector<ChatMessage>& messages) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ChatMessage& m : messages)
        arr.push_back({{"role", role_name(m.role)}, {"content", m.content}});
    return arr;
}

} // namespace conextract::prompts
