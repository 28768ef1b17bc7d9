#pragma once

// Hand-built fixture corpora, one per built-in pack. Expected outcomes were
// derived by applying the pack rules manually; tests assert the engine
// reproduces every one. Each fixture notes the rule it pins down.

#include <string>
#include <vector>

#include "polarqa/builtin_packs.hpp"
#include "polarqa/corpus.hpp"
#include "polarqa/rules.hpp"

namespace polarqa {

struct Fixture {
    QAPair pair;
    PairClass expected = PairClass::Indirect;
    std::string discard_reason;  // when expected == Discarded
    std::string note;            // rule the fixture exercises
};

namespace fixtures_detail {

inline std::string pad3(int n) {
    std::string s = std::to_string(n);
    while (s.size() < 3) s.insert(s.begin(), '0');
    return s;
}

// head + count copies of filler + optional tail, space-separated
inline std::string words(const std::string& head, const std::string& filler, int count,
                         const std::string& tail = "") {
    std::string out = head;
    for (int i = 0; i < count; ++i) out += " " + filler;
    if (!tail.empty()) out += " " + tail;
    return out;
}

struct Builder {
    std::string lang;
    std::string source;
    SourceMeta qmeta;
    SourceMeta ameta;
    int n = 0;
    std::vector<Fixture> out;

    void add(const std::string& q, const std::string& a, PairClass cls, const std::string& note,
             const std::string& reason = "") {
        add_meta(q, a, cls, note, reason, qmeta, ameta);
    }
    void add_meta(const std::string& q, const std::string& a, PairClass cls,
                  const std::string& note, const std::string& reason, SourceMeta qm,
                  SourceMeta am) {
        ++n;
        Turn qt = make_turn(lang + "-q-" + pad3(n), q, lang, std::nullopt, qm);
        Turn at = make_turn(lang + "-a-" + pad3(n), a, lang, std::nullopt, am);
        Fixture f;
        f.pair = make_qa_pair(std::move(qt), std::move(at), source);
        f.expected = cls;
        f.discard_reason = reason;
        f.note = note;
        out.push_back(std::move(f));
    }
};

inline std::vector<Fixture> hindi() {
    Builder b;
    b.lang = "hi";
    b.source = "fixtures/hi";
    b.qmeta.author_verified = true;
    b.qmeta.is_retweet = false;
    b.qmeta.is_reply = false;
    b.ameta.is_reply = true;

    const std::string q_ok = "क्या आप कल आ रहे हैं?";  // 7 tokens, bigram क्या आप

    // question side: each rule failing alone
    b.add("क्या आप कल आ रहे हैं", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q contains_char ? missing");
    b.add("आप कल आ रहे हैं?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q bigram missing");
    b.add("क्या आप जानते हैं वह कहाँ है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh कहाँ");
    b.add("क्या आप जानते हैं यह क्यों हुआ?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh क्यों");
    b.add("क्या यह कैसे हो सकता है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh कैसे");
    b.add("क्या आप जानते हैं कौन आया?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh कौन");
    b.add("क्या यह किसका घर है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh किसका");
    b.add("क्या आप बताएंगे कौनसा रंग ठीक है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh कौनसा");
    b.add("क्या आप चाय या कॉफी लेंगे?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh या (alternative question)");
    b.add("क्या आप बता सकते हैं कब आओगे?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q wh कब");
    b.add(words("क्या आप", "सच", 98, "?"), "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
          "q token count 101 > 100");

    {
        SourceMeta qm = b.qmeta;
        qm.link_count = 1;
        b.add_meta("क्या आप यह लिंक देखेंगे? https://t.co/abc", "जी बिल्कुल ऐसा ही समझ लीजिए",
                   PairClass::NotYesNo, "q no_links", "", qm, b.ameta);
        qm = b.qmeta;
        qm.mention_count = 1;
        b.add_meta("क्या आप @mitra से मिले हैं?", "जी बिल्कुल ऐसा ही समझ लीजिए",
                   PairClass::NotYesNo, "q max_mentions 0", "", qm, b.ameta);
        qm = b.qmeta;
        qm.hashtag_count = 1;
        b.add_meta("क्या यह #सच हो सकता है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo,
                   "q no_hashtags", "", qm, b.ameta);
        qm = b.qmeta;
        qm.digit_present = true;
        b.add_meta("क्या आप पाँच बजे आ रहे हैं?", "जी बिल्कुल ऐसा ही समझ लीजिए",
                   PairClass::NotYesNo, "q no_digits", "", qm, b.ameta);
        qm = b.qmeta;
        qm.author_verified = false;
        b.add_meta(q_ok, "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo, "q author_verified",
                   "", qm, b.ameta);
        qm = b.qmeta;
        qm.is_retweet = true;
        b.add_meta(q_ok, "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo, "q not_retweet", "",
                   qm, b.ameta);
        qm = b.qmeta;
        qm.is_reply = true;
        b.add_meta(q_ok, "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::NotYesNo, "q not_reply", "",
                   qm, b.ameta);
    }

    // yes keywords, one each; questions rotate over the bigram variants
    b.add(q_ok, "हाँ मैं कल जरूर आ रहा हूँ", PairClass::DirectYes, "yes हाँ");
    b.add("क्या हम साथ चल सकते हैं?", "हा मैं आ रहा हूँ दोस्त", PairClass::DirectYes, "yes हा");
    b.add("क्या यह सच हो सकता है?", "हां हम सब वहाँ पहुँच रहे हैं", PairClass::DirectYes,
          "yes हां");
    b.add("क्या कभी ऐसा हो सकता है?", "जी बिल्कुल ऐसा ही समझ लीजिए", PairClass::DirectYes,
          "yes जी");
    b.add("यह हो सकता है कि वह कल आए?", "ज़रूर हम आपके साथ चल रहे हैं", PairClass::DirectYes,
          "yes ज़रूर");
    b.add(q_ok, "सही कहा आपने मैं सहमत हूँ", PairClass::DirectYes, "yes सही");
    b.add(q_ok, "निश्चित रूप से यह काम हो जाएगा", PairClass::DirectYes, "yes ngram निश्चित रूप");
    b.add(q_ok, "yes bhai main kal zaroor aaunga", PairClass::DirectYes, "yes code-switch yes");
    b.add(q_ok, "yeah i will come tomorrow bhai", PairClass::DirectYes, "yes code-switch yeah");
    b.add(q_ok, "sure hum sab kal milte hain", PairClass::DirectYes, "yes code-switch sure");
    b.add(q_ok, "of course it can happen bhai", PairClass::DirectYes, "yes ngram of course");
    b.add(q_ok, "100% yeh kaam ho kar rahega", PairClass::DirectYes, "yes 100%");
    b.add(q_ok, words("हाँ", "सच", 29), PairClass::DirectYes, "answer 30 tokens (upper bound)");
    b.add("क्या आप?", "इस बारे में अभी सोच रहा हूँ", PairClass::Indirect,
          "q 3 tokens (lower bound)");

    // no keywords
    b.add(q_ok, "नही यह बात बिल्कुल गलत है", PairClass::DirectNo, "no नही");
    b.add("क्या हम साथ चल सकते हैं?", "नहीं हम वहाँ बिल्कुल जा सकते", PairClass::DirectNo,
          "no नहीं");
    b.add("क्या यह सच हो सकता है?", "मत करो यह काम मेरे भाई", PairClass::DirectNo, "no मत");
    b.add("क्या कभी ऐसा हो सकता है?", "न बाबा ऐसा काम कभी करना", PairClass::DirectNo, "no न");
    b.add(q_ok, "no yaar i am too busy", PairClass::DirectNo, "no code-switch no");
    b.add(q_ok, "never bhai aisa kabhi nahi hoga", PairClass::DirectNo, "no code-switch never");
    b.add(q_ok, "i don't think so at all", PairClass::DirectNo, "no n't token-suffix");

    // both polarities -> discard
    b.add(q_ok, "हाँ नहीं पता मुझे कुछ भी", PairClass::Discarded, "ambiguous polarity",
          "ambiguous-polarity");

    // answer constraints, one each
    {
        SourceMeta am = b.ameta;
        am.link_count = 1;
        b.add_meta(q_ok, "हाँ देखो यह वाला लिंक ठीक है", PairClass::Discarded, "a no_links",
                   "no_links", b.qmeta, am);
        am = b.ameta;
        am.hashtag_count = 1;
        b.add_meta(q_ok, "हाँ बिल्कुल ठीक बात कही आपने", PairClass::Discarded, "a no_hashtags",
                   "no_hashtags", b.qmeta, am);
        am = b.ameta;
        am.mention_count = 2;
        b.add_meta(q_ok, "हाँ हम दोनों कल आ रहे", PairClass::Discarded, "a max_mentions 1",
                   "max_mentions", b.qmeta, am);
    }
    b.add(q_ok, "हाँ लेकिन आप ऐसा पूछ रहे हैं?", PairClass::Discarded, "a question mark",
          "not_contains_char");
    b.add(q_ok, "हाँ मैं आ रहा हूँ", PairClass::Discarded, "a 5 tokens < 6",
          "token_count_between");
    b.add(q_ok, words("हाँ", "सच", 30), PairClass::Discarded, "a 31 tokens > 30",
          "token_count_between");

    // indirect answers
    b.add(q_ok, "देखना पड़ेगा समय मिले तो बताऊँगा", PairClass::Indirect, "indirect");
    b.add("क्या हम साथ चल सकते हैं?", "अभी कुछ कह पाना मुश्किल है", PairClass::Indirect,
          "indirect");
    return b.out;
}

inline std::vector<Fixture> turkish() {
    Builder b;
    b.lang = "tr";
    b.source = "fixtures/tr";
    b.ameta.is_accepted = true;

    // one question per interrogative particle; answers sweep the keywords
    b.add("hasta mıyım?", "evet maalesef öyle görünüyor", PairClass::DirectYes,
          "particle mıyım / yes evet");
    b.add("su içebilir miyim?", "evt alabilirsin tabii ki", PairClass::DirectYes,
          "particle miyim / yes evt");
    b.add("suçlu muyum?", "eet öyle görünüyor", PairClass::DirectYes, "particle muyum / yes eet");
    b.add("üzgün müyüm sence?", "tabii öyle görünüyorsun", PairClass::DirectYes,
          "particle müyüm / yes tabii");
    b.add("kızgın mısın?", "tabi biraz kızgınım", PairClass::DirectYes,
          "particle mısın / yes tabi");
    b.add("sen öğrenci misin?", "tabiiki öğrenciyim", PairClass::DirectYes,
          "particle misin / yes tabiiki");
    b.add("yorgun musun?", "tabiki çok yorgunum", PairClass::DirectYes,
          "particle musun / yes tabiki");
    b.add("üzgün müsün?", "aynen öyle hissediyorum", PairClass::DirectYes,
          "particle müsün / yes aynen");
    b.add("sarı mı bu?", "hıhı aynısından", PairClass::DirectYes, "particle mı / yes hıhı");
    b.add("geç mi kaldım?", "hayır tam zamanında geldin", PairClass::DirectNo,
          "particle mi / no hayır");
    b.add("kitabı okudun mu?", "hayir daha başlamadım", PairClass::DirectNo,
          "particle mu / no hayir");
    b.add("bu gül mü?", "hyr o bir lale", PairClass::DirectNo, "particle mü / no hyr");
    b.add("hazır mıyız?", "yoo daha toplanmadık", PairClass::DirectNo, "particle mıyız / no yoo");
    b.add("emin miyiz bundan?", "evet eminiz", PairClass::DirectYes, "particle miyiz");
    b.add("mutlu muyuz?", "bilmiyorum bakarız artık", PairClass::Indirect,
          "particle muyuz / indirect");
    b.add("özgür müyüz?", "belki yarın belli olur", PairClass::Indirect,
          "particle müyüz / indirect");
    b.add("hazır mısınız?", "evet hazırız", PairClass::DirectYes, "particle mısınız");
    b.add("yeni misiniz?", "evet geçen hafta geldik", PairClass::DirectYes, "particle misiniz");
    b.add("onu tanıyor musunuz?", "hayır hiç görmedim", PairClass::DirectNo, "particle musunuz");
    b.add("üzgün müsünüz?", "yoo gayet iyiyiz", PairClass::DirectNo, "particle müsünüz");

    // the 12-token direct-yes pair
    b.add("sen de bizimle birlikte yarın sabah o uzun yola çıkacak musun?", "evet tabii",
          PairClass::DirectYes, "12-token question, yes evet tabii");

    // question side: failures, one rule each
    b.add("lütfen bunu bana getir", "evet tabii", PairClass::NotYesNo, "q no particle");
    b.add("ne oldu söyler misin?", "evet tabii", PairClass::NotYesNo, "q wh ne");
    b.add("nerede kaldın geliyor musun?", "evet tabii", PairClass::NotYesNo, "q wh nerede");
    b.add("nasıl gidiyor iyi misin?", "evet tabii", PairClass::NotYesNo, "q wh nasıl");
    b.add("nasil yani emin misin?", "evet tabii", PairClass::NotYesNo, "q wh nasil");
    b.add("neden geldin anlatır mısın?", "evet tabii", PairClass::NotYesNo, "q wh neden");
    b.add("kim geldi gördün mü?", "evet tabii", PairClass::NotYesNo, "q wh kim");
    b.add("hangi rengi seçtin mavi mi?", "evet tabii", PairClass::NotYesNo, "q wh hangi");
    b.add("kimin bu çanta senin mi?", "evet tabii", PairClass::NotYesNo, "q wh kimin");
    b.add("sahne zamanı geldi mi?", "evet tabii", PairClass::NotYesNo,
          "q substring ne zaman without token ne");
    b.add(words("gelir misin", "yarın", 47, "?"), "evet tabii", PairClass::NotYesNo,
          "q 50 tokens (not < 50)");
    b.add(words("gelir misin", "yarın", 46, "?"), "evet tabii", PairClass::DirectYes,
          "q 49 tokens (upper bound)");

    // answers
    b.add("yarın gelir misin?", "evet hayır karar veremedim", PairClass::Discarded,
          "ambiguous polarity", "ambiguous-polarity");
    {
        SourceMeta am = b.ameta;
        am.is_accepted = false;
        b.add_meta("bu doğru mu?", "evet kesinlikle doğru", PairClass::Discarded,
                   "a accepted_answer false", "accepted_answer", b.qmeta, am);
    }
    b.add("bunu yapabilir misin?", "daha karar vermedim", PairClass::Indirect, "indirect");
    b.add("yarın uygun musun?", "sanırım olabilir", PairClass::Indirect, "indirect");
    b.add("bana yardım eder misin?", "EVET elbette ederim", PairClass::DirectYes,
          "case-insensitive evet");
    b.add("denedin mi hiç?", "yoo daha neler", PairClass::DirectNo, "no yoo");
    b.add("katılıyor musun bana?", "aynen öyle katılıyorum", PairClass::DirectYes, "yes aynen");
    b.add("geliyor musunuz akşama?", "evet, geliyoruz", PairClass::DirectYes,
          "keyword with trailing comma");
    return b.out;
}

inline std::vector<Fixture> spanish() {
    Builder b;
    b.lang = "es";
    b.source = "fixtures/es";

    const std::string q_ok = "¿vienes mañana?";

    // question side
    b.add("¿y tu hermana?", "si claro", PairClass::NotYesNo, "q no verb");
    b.add("vienes mañana a la fiesta", "si claro", PairClass::NotYesNo,
          "q does not end with ?");
    b.add("¿ir juntos?", "si claro", PairClass::NotYesNo,
          "q verb suffix blocked by min token length");
    b.add("¿cuando vienes a casa?", "si claro", PairClass::NotYesNo, "q wh cuando");
    b.add("¿cuándo vienes?", "si claro", PairClass::NotYesNo, "q wh cuándo");
    b.add("¿por que no vienes nunca?", "si claro", PairClass::NotYesNo, "q wh por que");
    b.add("¿por qué dices eso?", "si claro", PairClass::NotYesNo, "q wh por qué");
    b.add("¿donde estás ahora mismo?", "si claro", PairClass::NotYesNo, "q wh donde");
    b.add("¿dónde estás tú?", "si claro", PairClass::NotYesNo, "q wh dónde");
    b.add("¿como dices eso ahora?", "si claro", PairClass::NotYesNo, "q wh como");
    b.add("¿cómo estás hoy?", "si claro", PairClass::NotYesNo, "q wh cómo");
    b.add("¿cuanto cuesta el boleto?", "si claro", PairClass::NotYesNo, "q wh cuanto");
    b.add("¿cuánto cuesta esto hoy?", "si claro", PairClass::NotYesNo, "q wh cuánto");
    b.add("¿quien viene contigo hoy?", "si claro", PairClass::NotYesNo, "q wh quien");
    b.add("¿quién es esa persona?", "si claro", PairClass::NotYesNo, "q wh quién");
    b.add("¿cual es tu plan?", "si claro", PairClass::NotYesNo, "q wh cual");
    b.add("¿cuál es tu casa?", "si claro", PairClass::NotYesNo, "q wh cuál");
    b.add("¿cuales quieres llevar hoy?", "si claro", PairClass::NotYesNo, "q wh cuales");
    b.add("¿cuáles son tus planes?", "si claro", PairClass::NotYesNo, "q wh cuáles");
    b.add("¿viajar juntos mañana?", "si claro", PairClass::DirectYes,
          "q verb via infinitive suffix -ar");

    // yes keywords
    b.add(q_ok, "si", PairClass::DirectYes, "yes si");
    b.add(q_ok, "sí claro", PairClass::DirectYes, "yes sí");
    b.add(q_ok, "claro que puedo", PairClass::DirectYes, "yes claro");
    b.add(q_ok, "correct amigo", PairClass::DirectYes, "yes correct");
    b.add(q_ok, "correcto eso mismo", PairClass::DirectYes, "yes correcto");
    b.add(q_ok, "vale vale", PairClass::DirectYes, "yes vale");
    b.add(q_ok, "por supuesto que voy", PairClass::DirectYes, "yes ngram por supuesto");
    b.add(q_ok, "quizas mañana", PairClass::DirectYes, "yes quizas (as listed)");
    b.add(q_ok, "quizás sí", PairClass::DirectYes, "yes quizás");
    b.add(q_ok, "de acuerdo contigo", PairClass::DirectYes, "yes ngram de acuerdo");
    b.add(q_ok, "asi es la cosa", PairClass::DirectYes, "yes ngram asi es");
    b.add(q_ok, "así es señora", PairClass::DirectYes, "yes ngram así es");
    b.add(q_ok, "si, claro", PairClass::DirectYes, "yes si with trailing comma");

    // no keywords
    b.add(q_ok, "no", PairClass::DirectNo, "no no");
    b.add(q_ok, "nah no creo", PairClass::DirectNo, "no nah");
    b.add(q_ok, "nope", PairClass::DirectNo, "no nope");
    b.add(q_ok, "no se", PairClass::DirectNo, "no ngram no se (longest over no)");
    b.add(q_ok, "no sé todavía", PairClass::DirectNo, "no ngram no sé");
    b.add(q_ok, "no lo se aún", PairClass::DirectNo, "no ngram no lo se");
    b.add(q_ok, "no lo sé", PairClass::DirectNo, "no ngram no lo sé");
    b.add(q_ok, "no estoy seguro de eso", PairClass::DirectNo, "no ngram no estoy seguro");
    b.add(q_ok, "ni idea", PairClass::DirectNo, "no ngram ni idea");

    b.add(q_ok, "no claro", PairClass::Discarded, "ambiguous polarity", "ambiguous-polarity");
    b.add(q_ok, "bueno ya veremos luego", PairClass::Indirect, "indirect");
    b.add(q_ok, "depende del tiempo", PairClass::Indirect, "indirect");
    return b.out;
}

inline std::vector<Fixture> chinese() {
    Builder b;
    b.lang = "zh";
    b.source = "fixtures/zh";

    const std::string q_ok = "你要去吗？";

    // question side
    b.add("你今天好？", "好的", PairClass::NotYesNo, "q no modal particle before ？");
    b.add("你要去吗?", "好的", PairClass::NotYesNo, "q ASCII ? instead of ？");
    b.add("我不知道你要不要去吗", "好的", PairClass::NotYesNo, "q 吗 without ？");
    b.add("他是学生嘛", "好的", PairClass::NotYesNo, "q 嘛 without ？");
    b.add("我明天要去上海。", "好的", PairClass::NotYesNo, "q statement");
    b.add("你吃饭了么？", "好的", PairClass::NotYesNo, "q 么？ not in the particle list");

    // yes keywords (answer must start with them)
    b.add(q_ok, "对", PairClass::DirectYes, "yes 对");
    b.add(q_ok, "对的对的", PairClass::DirectYes, "yes 对 as prefix");
    b.add(q_ok, "好的", PairClass::DirectYes, "yes 好");
    b.add(q_ok, "好呀好呀", PairClass::DirectYes, "yes 好 as prefix");
    b.add(q_ok, "嗯嗯", PairClass::DirectYes, "yes 嗯");
    b.add(q_ok, "恩，是的", PairClass::DirectYes, "yes 恩 before comma");
    b.add(q_ok, "当然可以", PairClass::DirectYes, "yes 当然 spanning two tokens");
    b.add(q_ok, "必须的呀", PairClass::DirectYes, "yes 必须");

    // no keywords
    b.add(q_ok, "不行", PairClass::DirectNo, "no 不");
    b.add(q_ok, "不可以", PairClass::DirectNo, "no 不 (negated echo reads the same)");
    b.add(q_ok, "没有时间", PairClass::DirectNo, "no 没");
    b.add(q_ok, "没空", PairClass::DirectNo, "no 没");
    b.add(q_ok, "没问题", PairClass::DirectNo, "no 没 (known noise: idiom means yes)");

    // verb echo
    b.add("我可以坐这里吗？", "可以的", PairClass::DirectYes, "echo 可以");
    b.add("你会游泳吗？", "会一点点", PairClass::DirectYes, "echo 会");
    b.add("你有时间嘛？", "有空的", PairClass::DirectYes, "echo 有, particle 嘛？");
    b.add("你是学生吗？", "是的是的", PairClass::DirectYes, "echo 是");
    b.add("你想去吗？", "想啊", PairClass::DirectYes, "echo 想 (leftmost verb)");
    b.add("你喜欢这里吗？", "喜欢喜欢", PairClass::DirectYes, "echo 喜欢");
    b.add("明天去吗？", "去呀", PairClass::DirectYes, "echo 去");
    b.add("你同意吗？", "同意", PairClass::DirectYes, "echo 同意");
    b.add("现在能走吗？", "能", PairClass::DirectYes, "echo 能");
    b.add(q_ok, "要的", PairClass::DirectYes, "echo 要");
    b.add("你去过北京吗？", "去过两次", PairClass::DirectYes, "echo 去");
    b.add("你要能去吗？", "能的", PairClass::Indirect,
          "echo only matches the first verb (要), answer echoes 能");
    b.add("你吃了吗？", "吃了", PairClass::Indirect,
          "question has no lexicon verb, echo does not apply");

    // anchoring
    b.add(q_ok, "我说不行", PairClass::Indirect, "no keyword at answer start");
    b.add(q_ok, "，对", PairClass::Indirect, "leading punctuation blocks start anchor");

    // indirect
    b.add(q_ok, "我再想想吧", PairClass::Indirect, "indirect");
    b.add("这个好吃吗？", "还行吧", PairClass::Indirect, "indirect");
    b.add("你要去吗？", "看情况吧", PairClass::Indirect, "indirect");

    // more coverage
    b.add("今天开会吗？", "不开", PairClass::DirectNo, "no 不 before echo candidates");
    b.add("你能来吗？", "没能赶上", PairClass::DirectNo, "no 没 wins before echo");
    b.add("行李能带上飞机吗？", "当然", PairClass::DirectYes, "yes 当然");
    b.add("这是你的嘛？", "恩", PairClass::DirectYes, "yes 恩, particle 嘛？");
    b.add("可以便宜点吗？", "不可以的", PairClass::DirectNo, "no 不");
    b.add("下周还来吗？", "嗯，来的", PairClass::DirectYes, "yes 嗯 before comma");
    return b.out;
}

inline std::vector<Fixture> korean() {
    Builder b;
    b.lang = "ko";
    b.source = "fixtures/ko";

    const std::string q_ok = "지금 예약 가능한가요?";

    // wh exclusions
    b.add("거기까지 어떻게 가면 되나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 어떻게");
    b.add("뭐가 문제인가요?", "네 가능합니다", PairClass::NotYesNo, "q wh 뭐가");
    b.add("어떤 색으로 드릴까요?", "네 가능합니다", PairClass::NotYesNo, "q wh 어떤");
    b.add("무슨 일로 전화하셨나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 무슨");
    b.add("언제 도착하시나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 언제");
    b.add("어디에서 타시나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 어디");
    b.add("이거 얼마예요?", "네 가능합니다", PairClass::NotYesNo, "q wh 얼마");
    b.add("지금 몇 시에 출발하나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 몇 시");
    b.add("몇시까지 가면 되나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 몇시까지");
    b.add("왜 안 되는 건가요?", "네 가능합니다", PairClass::NotYesNo, "q wh 왜 안");
    b.add("무엇을 준비하면 되나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 무엇을");
    b.add("어느 지점으로 가야 하나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 어느");
    b.add("몇분 정도 걸리나요?", "네 가능합니다", PairClass::NotYesNo, "q wh 몇분");
    b.add("배송비 비용은요?", "네 가능합니다", PairClass::NotYesNo, "q wh 비용은요");
    b.add("차량번호확인 가능한가요?", "네 가능합니다", PairClass::NotYesNo, "q wh 차량번호확인");

    // statement-final particles
    b.add("예약 좀 할려구요.", "네 가능합니다", PairClass::NotYesNo,
          "q ends 할려구요 (trailing period stripped)");
    b.add("상담 문의 좀 하려구요", "네 가능합니다", PairClass::NotYesNo, "q ends 하려구요");
    b.add("그게 아니면", "네 가능합니다", PairClass::NotYesNo, "q ends 아니면");
    b.add("어제 전화했는데요", "네 가능합니다", PairClass::NotYesNo, "q ends 했는데요");
    b.add("금액이 좀 괜찮을 것 같", "네 가능합니다", PairClass::NotYesNo, "q ends 같");
    b.add("가까운 곳은 좋은데요", "네 가능합니다", PairClass::NotYesNo, "q ends 은데요");
    b.add("지금 가려고 하거든요", "네 가능합니다", PairClass::NotYesNo, "q ends 거든요");
    b.add("비가 많이 내렸는데요", "네 가능합니다", PairClass::NotYesNo, "q ends 렸는데요");
    b.add("오인승이면 될 것 같아서요", "네 가능합니다", PairClass::NotYesNo, "q ends 같아서요");
    b.add("한번 보고 싶어서요", "네 가능합니다", PairClass::NotYesNo, "q ends 싶어서요");
    b.add("말씀드린 금액은요", "네 가능합니다", PairClass::NotYesNo, "q ends 은요");
    b.add("시간이 없어서 좀 가지구요", "네 가능합니다", PairClass::NotYesNo, "q ends 가지구요");
    b.add("그냥 그런 것 같애서", "네 가능합니다", PairClass::NotYesNo, "q ends 같애서");
    b.add("계산은 제가 하는데요", "네 가능합니다", PairClass::NotYesNo, "q ends 하는데요");
    b.add("만원이라 카는데요", "네 가능합니다", PairClass::NotYesNo, "q ends 카는데요");
    b.add("주문 좀 할께요", "네 가능합니다", PairClass::NotYesNo, "q ends 좀 할께요");
    b.add("이사 가가지고", "네 가능합니다", PairClass::NotYesNo, "q ends 가가지고");
    b.add("짐은 그냥 놔두고 내렸는데", "네 가능합니다", PairClass::NotYesNo,
          "q ends 놔두고 내렸는데 (multi-word)");

    // yes keywords
    b.add(q_ok, "네 가능합니다", PairClass::DirectYes, "yes 네");
    b.add("내일 오전에 자리 있나요?", "예 바로 됩니다", PairClass::DirectYes, "yes 예");
    b.add("오늘 배송 되나요?", "그렇습니다 고객님", PairClass::DirectYes, "yes 그렇 prefix");
    b.add("거기 지금 주차 되나요?", "맞아요 그거예요", PairClass::DirectYes, "yes 맞아 prefix");
    b.add(q_ok, "네네 바로 해드릴게요", PairClass::DirectYes, "yes 네 prefix of 네네");
    b.add(q_ok, "네, 됩니다", PairClass::DirectYes, "yes 네 with trailing comma");

    // no keywords
    b.add(q_ok, "아 없습니다 지금은", PairClass::DirectNo, "no 아 없 (multi-word prefix)");
    b.add("내일 오전에 자리 있나요?", "예 없어요 오늘은", PairClass::DirectNo,
          "no 예 없 beats yes 예 (longest match)");
    b.add("오늘 배송 되나요?", "안타깝지만 어렵습니다", PairClass::DirectNo, "no 안타깝");
    b.add("이 카드로 결제 되나요?", "아니요 안 됩니다", PairClass::DirectNo, "no 아니");
    b.add(q_ok, "아뇨 그날은 어렵습니다", PairClass::DirectNo, "no 아뇨");
    b.add(q_ok, "아닙니다 다른 지점입니다", PairClass::DirectNo, "no 아닙");
    b.add(q_ok, "그건 아니고 이쪽입니다", PairClass::DirectNo,
          "no 아니 away from answer start (anchor anywhere)");

    b.add(q_ok, "네 아니 잠시만요", PairClass::Discarded, "ambiguous polarity",
          "ambiguous-polarity");
    b.add(q_ok, "확인해 보고 연락드리겠습니다", PairClass::Indirect, "indirect");
    b.add(q_ok, "지금은 자리가 없습니다", PairClass::Indirect,
          "없 alone is not a keyword (needs 아/예 before it)");
    return b.out;
}

}  // namespace fixtures_detail

inline std::vector<Fixture> fixture_corpus(const std::string& language) {
    if (language == "hi") return fixtures_detail::hindi();
    if (language == "tr") return fixtures_detail::turkish();
    if (language == "es") return fixtures_detail::spanish();
    if (language == "zh") return fixtures_detail::chinese();
    if (language == "ko") return fixtures_detail::korean();
    throw ConfigError("no fixture corpus for '" + language + "'");
}

}  // namespace polarqa
