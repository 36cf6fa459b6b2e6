// Copyright 2026 The Latechunk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "latechunk/docgraph/jats.h"

#include <expat.h>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fmt/format.h"
#include "latechunk/util/status.h"
#include "latechunk/util/text.h"

namespace latechunk::docgraph {
namespace {

struct XmlNode {
  std::string name;  // empty for text nodes
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<std::unique_ptr<XmlNode>> children;
  std::string text;

  bool is_text() const { return name.empty(); }

  std::string_view Attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
      if (k == key) return v;
    }
    return {};
  }

  const XmlNode* Child(std::string_view child_name) const {
    for (const auto& c : children) {
      if (c->name == child_name) return c.get();
    }
    return nullptr;
  }

  // Depth-first search for the first descendant with the given name.
  const XmlNode* Find(std::string_view target) const {
    for (const auto& c : children) {
      if (c->name == target) return c.get();
      if (const XmlNode* hit = c->Find(target)) return hit;
    }
    return nullptr;
  }

  void FindAll(std::string_view target, std::vector<const XmlNode*>* out) const {
    for (const auto& c : children) {
      if (c->name == target) out->push_back(c.get());
      c->FindAll(target, out);
    }
  }
};

struct TreeBuilder {
  std::unique_ptr<XmlNode> root = std::make_unique<XmlNode>();
  std::vector<XmlNode*> stack{root.get()};

  static void OnStart(void* data, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<TreeBuilder*>(data);
    auto node = std::make_unique<XmlNode>();
    node->name = name;
    for (int i = 0; atts[i] != nullptr; i += 2) {
      node->attrs.emplace_back(atts[i], atts[i + 1]);
    }
    XmlNode* raw = node.get();
    self->stack.back()->children.push_back(std::move(node));
    self->stack.push_back(raw);
  }

  static void OnEnd(void* data, const XML_Char*) {
    static_cast<TreeBuilder*>(data)->stack.pop_back();
  }

  static void OnText(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<TreeBuilder*>(data);
    XmlNode* parent = self->stack.back();
    if (!parent->children.empty() && parent->children.back()->is_text()) {
      parent->children.back()->text.append(s, len);
      return;
    }
    auto node = std::make_unique<XmlNode>();
    node->text.assign(s, len);
    parent->children.push_back(std::move(node));
  }
};

absl::StatusOr<std::unique_ptr<XmlNode>> ParseXmlTree(std::string_view xml) {
  TreeBuilder builder;
  XML_Parser parser = XML_ParserCreate("UTF-8");
  XML_SetUserData(parser, &builder);
  XML_SetElementHandler(parser, &TreeBuilder::OnStart, &TreeBuilder::OnEnd);
  XML_SetCharacterDataHandler(parser, &TreeBuilder::OnText);
  XML_SetParamEntityParsing(parser, XML_PARAM_ENTITY_PARSING_NEVER);
  const XML_Status rc = XML_Parse(parser, xml.data(),
                                  static_cast<int>(xml.size()), XML_TRUE);
  absl::Status status;
  if (rc != XML_STATUS_OK) {
    status = MakeError(
        ErrorKind::kMalformedXml,
        fmt::format("{} at line {}", XML_ErrorString(XML_GetErrorCode(parser)),
                    XML_GetCurrentLineNumber(parser)));
  }
  XML_ParserFree(parser);
  if (!status.ok()) return status;
  return std::move(builder.root);
}

bool IsSkippedElement(std::string_view name) {
  static const std::set<std::string_view> kSkipped = {
      "table-wrap", "table-wrap-group", "table", "fig", "fig-group",
      "disp-formula", "disp-formula-group", "supplementary-material",
      "tex-math", "mml:math", "math", "graphic", "media", "ref-list",
      "fn-group", "alternatives", "object-id"};
  return kSkipped.contains(name);
}

bool IsBlockElement(std::string_view name) {
  return name == "p" || name == "list" || name == "list-item" ||
         name == "def-item" || name == "disp-quote" || name == "title";
}

struct ParagraphText {
  std::string text;
  std::vector<std::string> citations;
};

void CollectText(const XmlNode& node, ParagraphText* out, size_t* skipped) {
  for (const auto& child : node.children) {
    if (child->is_text()) {
      out->text += child->text;
      continue;
    }
    if (IsSkippedElement(child->name)) {
      ++*skipped;
      continue;
    }
    if (child->name == "xref" && child->Attr("ref-type") == "bibr") {
      std::string_view rids = child->Attr("rid");
      while (!rids.empty()) {
        const size_t space = rids.find(' ');
        std::string_view rid = rids.substr(0, space);
        if (!rid.empty()) out->citations.emplace_back(rid);
        if (space == std::string_view::npos) break;
        rids.remove_prefix(space + 1);
      }
    }
    const bool block = IsBlockElement(child->name);
    if (block) out->text += ' ';
    CollectText(*child, out, skipped);
    if (block) out->text += ' ';
  }
}

std::string PlainText(const XmlNode& node) {
  ParagraphText pt;
  size_t skipped = 0;
  CollectText(node, &pt, &skipped);
  return CollapseWhitespace(pt.text);
}

// Intermediate section tree, pruned and flattened into the Document later.
struct RawSection {
  std::string label;
  bool in_body = true;
  // Paragraphs and subsections interleaved in reading order.
  struct Item {
    std::unique_ptr<ParagraphText> paragraph;
    std::unique_ptr<RawSection> section;
  };
  std::vector<Item> items;
};

void GatherSectionContent(const XmlNode& node, RawSection* section,
                          size_t* skipped) {
  for (const auto& child : node.children) {
    if (child->is_text()) continue;
    const std::string& name = child->name;
    if (name == "title" || name == "label") continue;
    if (IsSkippedElement(name)) {
      ++*skipped;
      continue;
    }
    if (name == "p") {
      auto para = std::make_unique<ParagraphText>();
      CollectText(*child, para.get(), skipped);
      para->text = CollapseWhitespace(para->text);
      section->items.push_back({std::move(para), nullptr});
    } else if (name == "sec") {
      auto sub = std::make_unique<RawSection>();
      if (const XmlNode* title = child->Child("title")) {
        sub->label = NormalizeLabel(PlainText(*title));
      }
      sub->in_body = section->in_body;
      GatherSectionContent(*child, sub.get(), skipped);
      section->items.push_back({nullptr, std::move(sub)});
    } else {
      // Containers such as boxed-text or list wrap further paragraphs.
      GatherSectionContent(*child, section, skipped);
    }
  }
}

std::string ArticleId(const XmlNode& meta, const std::string& fallback) {
  std::vector<const XmlNode*> ids;
  meta.FindAll("article-id", &ids);
  for (std::string_view preferred : {"pmc", "pmcid", "pmid", "doi"}) {
    for (const XmlNode* id : ids) {
      if (id->Attr("pub-id-type") != preferred) continue;
      std::string value = PlainText(*id);
      if (value.empty()) continue;
      if ((preferred == "pmc" || preferred == "pmcid") &&
          !value.starts_with("PMC")) {
        value = "PMC" + value;
      }
      return value;
    }
  }
  return fallback;
}

Reference ParseReference(const XmlNode& ref) {
  Reference out;
  out.id = std::string(ref.Attr("id"));
  std::vector<const XmlNode*> names;
  ref.FindAll("name", &names);
  if (!names.empty()) {
    if (const XmlNode* surname = names.front()->Child("surname")) {
      out.first_author = PlainText(*surname);
    }
    out.et_al = names.size() > 1 || ref.Find("etal") != nullptr;
  } else if (const XmlNode* collab = ref.Find("collab")) {
    out.first_author = PlainText(*collab);
  } else if (const XmlNode* string_name = ref.Find("string-name")) {
    out.first_author = PlainText(*string_name);
  }
  if (const XmlNode* year = ref.Find("year")) out.year = PlainText(*year);
  return out;
}

class DocumentAssembler {
 public:
  explicit DocumentAssembler(Document* doc) : doc_(doc) {}

  // Appends a section subtree. Returns the new section index, or -1 when the
  // subtree holds no tokens and was dropped.
  int AddSection(const RawSection& raw, int parent) {
    const size_t first_token = doc_->tokens.size();
    const int index = static_cast<int>(doc_->sections.size());
    {
      Section s;
      s.label = raw.label;
      s.kind = raw.in_body ? KindFromLabel(raw.label) : SectionKind::kAbstract;
      s.parent = parent;
      s.top = parent < 0 ? index : doc_->sections[parent].top;
      s.depth = parent < 0 ? 0 : doc_->sections[parent].depth + 1;
      s.in_body = raw.in_body;
      doc_->sections.push_back(std::move(s));
    }
    for (const RawSection::Item& item : raw.items) {
      if (item.paragraph) {
        AddParagraph(*item.paragraph, index);
      } else if (const int sub = AddSection(*item.section, index); sub >= 0) {
        doc_->sections[index].subsections.push_back(sub);
        doc_->sections[index].word_count += doc_->sections[sub].word_count;
      }
    }
    Section& s = doc_->sections[index];
    s.span = {first_token, doc_->tokens.size()};
    if (s.span.empty()) {
      doc_->sections.pop_back();
      return -1;
    }
    return index;
  }

 private:
  void AddParagraph(const ParagraphText& para, int section) {
    std::vector<RawToken> raw = Tokenize(para.text);
    if (raw.empty()) return;
    if (!doc_->text.empty()) doc_->text += "\n\n";
    const size_t base = doc_->text.size();
    doc_->text += para.text;

    Paragraph p;
    p.section = section;
    p.span.begin = doc_->tokens.size();
    for (RawToken& t : raw) {
      doc_->tokens.push_back({std::move(t.text), base + t.offset, section});
    }
    p.span.end = doc_->tokens.size();
    p.citations = para.citations;
    p.word_count = CountWords(para.text);
    doc_->sections[section].word_count += p.word_count;
    doc_->sections[section].paragraphs.push_back(
        static_cast<int>(doc_->paragraphs.size()));
    doc_->paragraphs.push_back(std::move(p));
  }

  Document* doc_;
};

}  // namespace

absl::StatusOr<Document> ParseJats(std::string_view xml,
                                   const JatsOptions& options,
                                   JatsDiagnostics* diagnostics) {
  LC_ASSIGN_OR_RETURN(std::unique_ptr<XmlNode> root, ParseXmlTree(xml));
  JatsDiagnostics local;
  JatsDiagnostics& diag = diagnostics ? *diagnostics : local;

  const XmlNode* article = root->Find("article");
  if (article == nullptr) article = root.get();

  Document doc;
  const XmlNode* meta = article->Find("article-meta");
  doc.doc_id = meta ? ArticleId(*meta, options.fallback_id) : options.fallback_id;
  doc.source_id = doc.doc_id;
  if (meta != nullptr) {
    if (const XmlNode* title = meta->Find("article-title")) {
      doc.title = PlainText(*title);
    }
  }

  // Bibliography first so markers can be validated.
  if (const XmlNode* back = article->Child("back")) {
    std::vector<const XmlNode*> refs;
    back->FindAll("ref", &refs);
    for (const XmlNode* ref : refs) {
      Reference r = ParseReference(*ref);
      if (!r.id.empty() && doc.FindReference(r.id) == nullptr) {
        doc.references.push_back(std::move(r));
      }
    }
  }

  DocumentAssembler assembler(&doc);
  if (meta != nullptr) {
    std::vector<const XmlNode*> abstracts;
    meta->FindAll("abstract", &abstracts);
    for (const XmlNode* abstract : abstracts) {
      const std::string_view type = abstract->Attr("abstract-type");
      if (!type.empty() && type != "structured" && type != "summary") continue;
      RawSection raw;
      raw.label = "Abstract";
      raw.in_body = false;
      std::vector<const XmlNode*> paras;
      abstract->FindAll("p", &paras);
      for (const XmlNode* p : paras) {
        auto para = std::make_unique<ParagraphText>();
        CollectText(*p, para.get(), &diag.skipped_elements);
        para->text = CollapseWhitespace(para->text);
        raw.items.push_back({std::move(para), nullptr});
      }
      assembler.AddSection(raw, -1);
      break;
    }
  }

  const XmlNode* body = article->Child("body");
  if (body == nullptr) body = root->Find("body");
  if (body != nullptr) {
    // Paragraphs sitting directly in <body> before or between sections go
    // into an untitled section of their own.
    RawSection loose;
    auto flush_loose = [&]() {
      if (!loose.items.empty()) assembler.AddSection(loose, -1);
      loose = RawSection();
    };
    for (const auto& child : body->children) {
      if (child->is_text()) continue;
      if (child->name == "sec") {
        flush_loose();
        RawSection raw;
        if (const XmlNode* title = child->Child("title")) {
          raw.label = NormalizeLabel(PlainText(*title));
        }
        GatherSectionContent(*child, &raw, &diag.skipped_elements);
        assembler.AddSection(raw, -1);
      } else if (IsSkippedElement(child->name)) {
        ++diag.skipped_elements;
      } else {
        if (child->name == "p") {
          auto para = std::make_unique<ParagraphText>();
          CollectText(*child, para.get(), &diag.skipped_elements);
          para->text = CollapseWhitespace(para->text);
          loose.items.push_back({std::move(para), nullptr});
        } else {
          GatherSectionContent(*child, &loose, &diag.skipped_elements);
        }
      }
    }
    flush_loose();
  }

  for (const Section& s : doc.sections) {
    if (s.parent < 0 && s.in_body) doc.word_count += s.word_count;
  }
  if (doc.word_count == 0) {
    return MakeError(ErrorKind::kEmptyBody,
                     fmt::format("no body text in article '{}'", doc.doc_id));
  }

  // Keep only markers that resolve to a bibliography entry.
  for (Paragraph& p : doc.paragraphs) {
    auto dangling = std::remove_if(
        p.citations.begin(), p.citations.end(),
        [&](const std::string& rid) { return doc.FindReference(rid) == nullptr; });
    diag.dangling_citations += static_cast<size_t>(p.citations.end() - dangling);
    p.citations.erase(dangling, p.citations.end());
  }
  return doc;
}

}  // namespace latechunk::docgraph
