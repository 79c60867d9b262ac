#ifndef CONEXTRACT_PROMPTS_HPP
#define CONEXTRACT_PROMPTS_HPP

#include "conextract/corpus.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace conextract::prompts {

enum class Role { system, user, assistant };

std::string role_name(Role role);

struct ChatMessage {
    Role role = Role::user;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

enum class SearchTerm { keywords, keyphrases, concepts, entities, topics };

std::string to_string(SearchTerm term);
SearchTerm parse_search_term(const std::string& name);

enum class FewShotStrategy { fixed, random, closest };

std::string to_string(FewShotStrategy strategy);
FewShotStrategy parse_strategy(const std::string& name);

struct PromptTemplate {
    std::string name;
    SearchTerm search_term = SearchTerm::keyphrases;
    std::optional<std::string> system_text;
    std::optional<std::string> domain_clause;
    std::optional<FewShotStrategy> fs_strategy;
    std::optional<int> fs_n;

    bool is_few_shot() const { return fs_strategy.has_value(); }
};

struct PromptInstance {
    std::vector<ChatMessage> messages;
    std::string target_doc_id;
    std::string template_name;
};

/// Catalog names, in a stable order. Few-shot entries take n separately.
std::vector<std::string> list_templates();

/// Looks up a catalog template by name; throws on unknown names.
PromptTemplate get_template(const std::string& name);

PromptInstance build_zero_shot(const PromptTemplate& tpl, const corpus::Document& doc);

PromptInstance build_few_shot(const PromptTemplate& tpl, const corpus::Document& doc,
                              const std::vector<corpus::Entry>& examples);

nlohmann::json template_to_json(const PromptTemplate& tpl);
nlohmann::json messages_to_json(const std::vector<ChatMessage>& messages);

} // namespace conextract::prompts

#endif // CONEXTRACT_PROMPTS_HPP
