"""Regenerate the bundled data files in src/subchar/data.

Everything a mapping file or the desk corpus contains originates here:
hand-written pinyin homophone groups, a pinyin-to-bopomofo syllable
table, small curated glyph tables, a weighted word list, and a seeded
corpus synthesizer. Running the script is deterministic, so the checked
in files can always be reproduced bit for bit.

Usage: python tools/gen_data.py [outdir]
"""

from __future__ import annotations

import itertools
import os
import random
import re
import sys

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_SRC = os.path.join(_ROOT, "src")
if _SRC not in sys.path:
    sys.path.insert(0, _SRC)

from subchar.charmap import gen_random_map, is_cjk, write_mapping_file

# ---------------------------------------------------------------------------
# Pinyin homophone groups. Key is syllable plus tone digit (5 = neutral),
# value is every covered character with that canonical reading. A character
# appears in exactly one group; polyphones are filed under their most common
# reading. u-umlaut is written v (lv4), never otherwise used in pinyin.
# ---------------------------------------------------------------------------

PINYIN: dict[str, str] = {
    "a1": "阿",
    "a5": "啊",
    "ai1": "哀埃唉挨",
    "ai2": "癌",
    "ai3": "矮蔼",
    "ai4": "爱艾碍暧隘",
    "an1": "安鞍氨庵",
    "an3": "俺",
    "an4": "案按暗岸黯",
    "ang1": "肮",
    "ang2": "昂",
    "ang4": "盎",
    "ao1": "凹",
    "ao2": "熬翱嗷遨",
    "ao3": "袄",
    "ao4": "奥傲澳懊",
    "ba1": "八巴芭疤叭捌",
    "ba2": "拔跋",
    "ba3": "把靶",
    "ba4": "爸坝霸罢",
    "ba5": "吧",
    "bai2": "白",
    "bai3": "百摆柏佰",
    "bai4": "败拜",
    "ban1": "班般搬斑颁",
    "ban3": "板版",
    "ban4": "办半伴拌扮瓣绊",
    "bang1": "帮邦梆",
    "bang3": "绑榜膀",
    "bang4": "棒磅傍镑谤蚌",
    "bao1": "包胞苞褒",
    "bao2": "雹",
    "bao3": "保宝饱堡",
    "bao4": "报抱爆暴鲍豹",
    "bei1": "杯悲碑卑",
    "bei3": "北",
    "bei4": "被备背倍贝辈惫狈悖",
    "ben1": "奔",
    "ben3": "本苯",
    "ben4": "笨",
    "beng1": "崩绷",
    "beng4": "蹦迸泵",
    "bi1": "逼",
    "bi2": "鼻",
    "bi3": "比笔彼鄙",
    "bi4": "必毕币避闭壁臂弊碧蔽毙庇",
    "bian1": "边编鞭蝙",
    "bian3": "扁贬匾",
    "bian4": "变便遍辩辨辫",
    "biao1": "标彪膘飙",
    "biao3": "表",
    "bie1": "憋鳖",
    "bie2": "别",
    "bie3": "瘪",
    "bin1": "宾滨彬濒",
    "bing1": "冰兵",
    "bing3": "丙柄饼秉禀",
    "bing4": "病并",
    "bo1": "波播拨菠玻剥钵",
    "bo2": "博伯勃泊渤舶脖铂箔薄驳搏膊",
    "bo3": "跛簸",
    "bu1": "逋",
    "bu3": "补捕哺卜",
    "bu4": "不布步部怖埠簿",
    "ca1": "擦",
    "cai1": "猜",
    "cai2": "才材财裁",
    "cai3": "采彩踩睬",
    "cai4": "菜蔡",
    "can1": "参餐",
    "can2": "残蚕惭",
    "can3": "惨",
    "can4": "灿",
    "cang1": "仓苍舱沧",
    "cang2": "藏",
    "cao1": "操糙",
    "cao2": "曹槽嘈",
    "cao3": "草",
    "ce4": "册侧测厕策",
    "cen2": "岑",
    "ceng1": "噌",
    "ceng2": "层曾",
    "ceng4": "蹭",
    "cha1": "差插叉",
    "cha2": "查茶察搽",
    "cha4": "岔诧刹",
    "chai1": "拆钗",
    "chai2": "柴豺",
    "chan1": "搀掺",
    "chan2": "缠蝉馋禅蟾",
    "chan3": "产铲阐",
    "chan4": "颤忏",
    "chang1": "昌猖娼",
    "chang2": "长常场尝肠偿",
    "chang3": "厂敞",
    "chang4": "唱畅倡",
    "chao1": "超抄钞",
    "chao2": "朝潮巢嘲",
    "chao3": "吵炒",
    "che1": "车",
    "che3": "扯",
    "che4": "彻撤澈",
    "chen1": "嗔",
    "chen2": "陈沉晨尘臣辰",
    "chen4": "趁衬",
    "cheng1": "称撑",
    "cheng2": "成城程承乘诚惩呈橙澄",
    "cheng3": "逞",
    "cheng4": "秤",
    "chi1": "吃痴嗤魑",
    "chi2": "持池迟驰匙",
    "chi3": "尺齿耻侈",
    "chi4": "赤斥翅炽",
    "chong1": "冲充憧",
    "chong2": "虫崇",
    "chong3": "宠",
    "chou1": "抽",
    "chou2": "愁仇绸稠筹酬踌",
    "chou3": "丑",
    "chou4": "臭",
    "chu1": "出初",
    "chu2": "除厨锄雏橱",
    "chu3": "楚础储杵",
    "chu4": "处触畜",
    "chuai3": "揣",
    "chuan1": "川穿",
    "chuan2": "传船",
    "chuan3": "喘",
    "chuan4": "串",
    "chuang1": "窗疮",
    "chuang2": "床",
    "chuang3": "闯",
    "chuang4": "创",
    "chui1": "吹炊",
    "chui2": "垂锤捶",
    "chun1": "春",
    "chun2": "纯唇醇淳",
    "chun3": "蠢",
    "chuo4": "绰辍",
    "ci1": "疵",
    "ci2": "词辞慈磁雌瓷",
    "ci3": "此",
    "ci4": "次刺赐",
    "cong1": "聪葱匆",
    "cong2": "从丛",
    "cou4": "凑",
    "cu1": "粗",
    "cu4": "促醋簇",
    "cuan4": "窜篡",
    "cui1": "催崔摧",
    "cui4": "脆翠粹萃淬",
    "cun1": "村",
    "cun2": "存",
    "cun4": "寸",
    "cuo1": "搓磋撮",
    "cuo4": "错措挫",
    "da1": "搭嗒",
    "da2": "达答",
    "da3": "打",
    "da4": "大",
    "dai1": "呆",
    "dai4": "代带待戴贷袋逮怠",
    "dan1": "单担丹耽",
    "dan3": "胆",
    "dan4": "但蛋淡弹诞氮旦",
    "dang1": "当铛",
    "dang3": "党挡",
    "dang4": "荡档",
    "dao1": "刀叨",
    "dao3": "导岛倒捣祷蹈",
    "dao4": "到道盗稻悼",
    "de2": "得德",
    "de5": "的",
    "deng1": "登灯蹬",
    "deng3": "等",
    "deng4": "邓凳瞪",
    "di1": "低滴堤",
    "di2": "敌笛涤嘀迪",
    "di3": "底抵诋邸",
    "di4": "地第弟帝递缔蒂",
    "dian1": "颠掂",
    "dian3": "点典碘",
    "dian4": "电店殿垫淀惦奠佃",
    "diao1": "雕叼凋",
    "diao4": "调掉钓吊",
    "die1": "爹跌",
    "die2": "叠碟蝶谍",
    "ding1": "丁叮盯钉",
    "ding3": "顶鼎",
    "ding4": "定订",
    "diu1": "丢",
    "dong1": "东冬",
    "dong3": "懂董",
    "dong4": "动洞冻栋",
    "dou1": "都兜",
    "dou3": "斗抖陡",
    "dou4": "豆逗痘",
    "du1": "督",
    "du2": "读独毒犊",
    "du3": "堵赌睹",
    "du4": "度渡杜妒肚镀",
    "duan1": "端",
    "duan3": "短",
    "duan4": "段断锻缎",
    "dui1": "堆",
    "dui4": "对队兑",
    "dun1": "吨蹲敦墩",
    "dun4": "顿盾钝炖",
    "duo1": "多哆",
    "duo2": "夺",
    "duo3": "朵躲",
    "duo4": "堕舵惰跺",
    "e1": "婀",
    "e2": "鹅蛾额俄讹娥",
    "e4": "饿恶扼遏鄂愕",
    "en1": "恩",
    "er2": "而儿",
    "er3": "耳尔饵",
    "er4": "二贰",
    "fa1": "发",
    "fa2": "罚乏伐阀筏",
    "fa3": "法",
    "fan1": "翻帆番",
    "fan2": "凡烦繁樊",
    "fan3": "反返",
    "fan4": "饭犯泛范贩",
    "fang1": "方芳坊",
    "fang2": "房防妨肪",
    "fang3": "访纺仿",
    "fang4": "放",
    "fei1": "飞非啡菲妃",
    "fei2": "肥",
    "fei3": "匪诽",
    "fei4": "费废肺沸吠",
    "fen1": "分纷芬氛吩",
    "fen2": "坟焚",
    "fen3": "粉",
    "fen4": "份奋愤粪",
    "feng1": "风封丰峰锋蜂疯枫烽",
    "feng2": "逢缝冯",
    "feng4": "凤奉",
    "fo2": "佛",
    "fou3": "否",
    "fu1": "夫肤孵敷",
    "fu2": "服福浮符幅伏扶拂袱俘",
    "fu3": "府腐辅抚斧俯脯",
    "fu4": "付父负富副复妇赴附傅腹覆赋缚咐",
    "ga1": "嘎",
    "gai1": "该",
    "gai3": "改",
    "gai4": "盖概钙丐",
    "gan1": "甘杆肝竿尴",
    "gan3": "感敢赶",
    "gan4": "干",
    "gang1": "刚钢纲缸岗",
    "gang3": "港",
    "gao1": "高糕膏篙",
    "gao3": "搞稿",
    "gao4": "告",
    "ge1": "歌哥割胳搁鸽",
    "ge2": "格革隔阁葛",
    "ge4": "个各",
    "gei3": "给",
    "gen1": "跟根",
    "gen4": "亘",
    "geng1": "耕庚羹",
    "geng4": "更",
    "gong1": "工公功攻供宫恭躬弓",
    "gong4": "共贡",
    "gou1": "沟钩勾",
    "gou3": "狗苟",
    "gou4": "够构购垢",
    "gu1": "姑估孤辜菇咕箍",
    "gu3": "古股骨谷鼓",
    "gu4": "故顾固雇",
    "gua1": "瓜刮",
    "gua3": "寡",
    "gua4": "挂褂卦",
    "guai1": "乖",
    "guai3": "拐",
    "guai4": "怪",
    "guan1": "关观官冠棺",
    "guan3": "管馆",
    "guan4": "惯灌罐贯",
    "guang1": "光",
    "guang3": "广",
    "guang4": "逛",
    "gui1": "规归龟硅瑰",
    "gui3": "鬼轨诡",
    "gui4": "贵柜桂跪刽",
    "gun3": "滚",
    "gun4": "棍",
    "guo1": "锅郭",
    "guo2": "国",
    "guo3": "果裹",
    "guo4": "过",
    "ha1": "哈",
    "hai2": "还孩",
    "hai3": "海",
    "hai4": "害骇氦",
    "han1": "憨酣鼾",
    "han2": "含寒韩涵函",
    "han3": "喊罕",
    "han4": "汉汗旱悍捍焊憾撼翰",
    "hang2": "航杭",
    "hao2": "豪毫嚎壕",
    "hao3": "好",
    "hao4": "号耗浩",
    "he1": "喝呵",
    "he2": "和合河何核荷盒禾阂",
    "he4": "贺赫褐鹤",
    "hei1": "黑嘿",
    "hen2": "痕",
    "hen3": "很狠",
    "hen4": "恨",
    "heng1": "哼",
    "heng2": "横恒衡",
    "hong1": "轰烘哄",
    "hong2": "红宏洪虹鸿",
    "hou2": "猴喉侯",
    "hou3": "吼",
    "hou4": "后厚候",
    "hu1": "呼忽乎",
    "hu2": "湖胡壶糊蝴狐弧葫",
    "hu3": "虎唬",
    "hu4": "户护互沪",
    "hua1": "花",
    "hua2": "华滑哗",
    "hua4": "化话画划",
    "huai2": "怀淮槐",
    "huai4": "坏",
    "huan1": "欢",
    "huan2": "环",
    "huan3": "缓",
    "huan4": "换患幻唤焕痪宦",
    "huang1": "荒慌",
    "huang2": "黄皇煌蝗凰惶",
    "huang3": "晃谎恍",
    "hui1": "灰挥辉恢徽",
    "hui2": "回",
    "hui3": "悔毁",
    "hui4": "会汇惠慧贿秽晦讳绘",
    "hun1": "婚昏荤",
    "hun2": "魂浑馄",
    "hun4": "混",
    "huo1": "豁",
    "huo2": "活",
    "huo3": "火伙",
    "huo4": "或货获祸惑霍",
}

PINYIN.update({
    "ji1": "机鸡基击积极激饥肌讥玑唧姬缉畸箕稽",
    "ji2": "及级即集急吉籍疾辑嫉棘藉",
    "ji3": "几己挤脊戟",
    "ji4": "记计济技际纪继寄寂祭忌妓剂既迹绩季悸冀骥",
    "jia1": "家加佳嘉夹枷伽浃",
    "jia2": "颊",
    "jia3": "假甲贾钾",
    "jia4": "价架驾嫁稼",
    "jian1": "间坚肩艰兼监煎尖奸歼",
    "jian3": "简减剪检捡拣碱俭茧",
    "jian4": "见件建健剑箭舰鉴键荐贱溅涧腱渐",
    "jiang1": "江将姜僵疆浆",
    "jiang3": "讲奖蒋桨",
    "jiang4": "降酱匠",
    "jiao1": "交浇骄娇焦胶椒郊礁蕉",
    "jiao2": "嚼",
    "jiao3": "角脚狡绞饺缴搅侥矫",
    "jiao4": "叫较教轿窖酵",
    "jie1": "接街阶皆揭嗟",
    "jie2": "节结洁杰捷截竭劫睫",
    "jie3": "姐解",
    "jie4": "界借介戒届诫芥疥",
    "jin1": "金今斤筋津禁襟巾",
    "jin3": "紧仅谨锦",
    "jin4": "进近尽劲晋浸烬",
    "jing1": "经京精惊晶睛菁兢茎鲸",
    "jing3": "井景警颈",
    "jing4": "静竟境净敬镜径竞靖",
    "jiong1": "扃",
    "jiu1": "究纠揪鸠",
    "jiu3": "九久酒灸韭",
    "jiu4": "就旧救舅臼咎疚",
    "ju1": "居据拘鞠驹",
    "ju2": "局菊橘",
    "ju3": "举沮咀矩",
    "ju4": "句具距惧聚剧锯俱炬巨拒",
    "juan1": "捐娟",
    "juan3": "卷",
    "juan4": "倦眷绢",
    "jue2": "觉决绝掘崛爵诀",
    "jun1": "军均君菌钧",
    "jun4": "俊峻竣骏",
    "ka1": "咖",
    "ka3": "卡",
    "kai1": "开揩",
    "kai3": "凯慨楷",
    "kan1": "刊堪勘",
    "kan3": "砍坎侃",
    "kan4": "看",
    "kang1": "康慷糠",
    "kang2": "扛",
    "kang4": "抗炕亢",
    "kao3": "考烤拷",
    "kao4": "靠",
    "ke1": "科颗棵柯苛磕",
    "ke2": "壳咳",
    "ke3": "可渴坷",
    "ke4": "课克客刻恪",
    "ken3": "肯恳啃垦",
    "keng1": "坑",
    "kong1": "空",
    "kong3": "孔恐",
    "kong4": "控",
    "kou1": "抠",
    "kou3": "口",
    "kou4": "扣寇",
    "ku1": "哭枯窟",
    "ku3": "苦",
    "ku4": "库裤酷",
    "kua1": "夸",
    "kua4": "跨挎胯",
    "kuai4": "快块筷",
    "kuan1": "宽",
    "kuan3": "款",
    "kuang1": "筐框",
    "kuang2": "狂",
    "kuang4": "况矿旷眶",
    "kui1": "亏窥盔",
    "kui2": "葵魁",
    "kui4": "愧溃馈",
    "kun1": "昆坤",
    "kun3": "捆",
    "kun4": "困",
    "kuo4": "阔扩括廓",
    "la1": "拉啦垃",
    "la4": "辣蜡腊",
    "lai2": "来莱",
    "lai4": "赖",
    "lan2": "蓝兰栏拦篮澜婪",
    "lan3": "懒览揽缆榄",
    "lan4": "烂滥",
    "lang2": "狼郎廊琅螂",
    "lang3": "朗",
    "lang4": "浪",
    "lao1": "捞",
    "lao2": "劳牢唠",
    "lao3": "老姥",
    "lao4": "涝烙",
    "le4": "乐勒",
    "le5": "了",
    "lei2": "雷",
    "lei3": "垒蕾磊",
    "lei4": "类泪累",
    "leng2": "棱",
    "leng3": "冷",
    "leng4": "愣",
    "li2": "离梨犁黎璃漓篱狸",
    "li3": "里理李礼鲤俚",
    "li4": "力立利历例丽励厉莉粒栗吏沥砾莅",
    "lia3": "俩",
    "lian2": "连联莲廉镰帘怜涟",
    "lian3": "脸敛",
    "lian4": "练炼恋链",
    "liang2": "良凉梁粮粱量",
    "liang3": "两魉",
    "liang4": "亮辆谅晾",
    "liao2": "聊疗辽僚缭寥",
    "liao4": "料廖撂",
    "lie4": "列烈裂猎劣",
    "lin2": "林临邻琳磷鳞淋霖",
    "lin3": "凛",
    "lin4": "吝赁",
    "ling2": "零铃灵龄凌陵菱伶玲",
    "ling3": "领岭",
    "ling4": "另令",
    "liu1": "溜",
    "liu2": "流留刘榴瘤硫浏",
    "liu3": "柳",
    "liu4": "六",
    "long2": "龙隆笼聋胧珑咙",
    "long3": "拢垄",
    "lou2": "楼娄",
    "lou4": "漏陋",
    "lu2": "炉卢芦庐颅",
    "lu3": "鲁卤虏",
    "lu4": "路露陆录鹿碌赂麓",
    "luan2": "峦",
    "luan3": "卵",
    "luan4": "乱",
    "lun2": "轮伦沦仑",
    "lun4": "论",
    "luo2": "罗萝锣骡螺逻",
    "luo3": "裸",
    "luo4": "落洛骆络",
    "lv2": "驴",
    "lv3": "旅吕铝履屡缕侣",
    "lv4": "绿律率虑滤氯",
    "lve4": "略掠",
})

PINYIN.update({
    "ma1": "妈",
    "ma2": "麻",
    "ma3": "马码蚂玛",
    "ma4": "骂",
    "ma5": "吗嘛",
    "mai2": "埋",
    "mai3": "买",
    "mai4": "卖麦迈脉",
    "man2": "瞒馒蛮",
    "man3": "满",
    "man4": "慢漫曼蔓幔",
    "mang2": "忙盲茫芒",
    "mao1": "猫",
    "mao2": "毛矛茅锚髦",
    "mao3": "卯",
    "mao4": "冒贸帽茂貌",
    "me5": "么",
    "mei2": "没眉梅媒煤霉玫莓枚",
    "mei3": "美每镁",
    "mei4": "妹魅媚昧寐",
    "men2": "门",
    "men4": "闷",
    "men5": "们",
    "meng2": "蒙萌盟朦檬",
    "meng3": "猛锰蟒",
    "meng4": "梦孟",
    "mi1": "眯",
    "mi2": "迷谜弥靡糜",
    "mi3": "米",
    "mi4": "密秘蜜觅",
    "mian2": "棉眠绵",
    "mian3": "免勉缅冕娩",
    "mian4": "面",
    "miao2": "苗描瞄",
    "miao3": "秒渺藐",
    "miao4": "妙庙",
    "mie4": "灭蔑",
    "min2": "民",
    "min3": "敏悯闽",
    "ming2": "明名鸣铭冥",
    "ming4": "命",
    "miu4": "谬",
    "mo1": "摸",
    "mo2": "模磨摩膜魔蘑",
    "mo3": "抹",
    "mo4": "末沫漠寞墨默陌莫",
    "mou2": "谋牟眸",
    "mou3": "某",
    "mu3": "母亩牡姆拇",
    "mu4": "木目幕墓慕牧募睦穆暮",
    "na2": "拿",
    "na3": "哪",
    "na4": "那纳钠娜",
    "nai3": "奶乃",
    "nai4": "耐奈",
    "nan2": "南难男楠喃",
    "nan3": "腩",
    "nang2": "囊",
    "nao3": "脑恼",
    "nao4": "闹",
    "ne5": "呢",
    "nei4": "内",
    "nen4": "嫩",
    "neng2": "能",
    "ni2": "尼泥妮霓",
    "ni3": "你拟",
    "ni4": "逆腻匿溺昵",
    "nian1": "蔫",
    "nian2": "年粘",
    "nian3": "捻碾",
    "nian4": "念",
    "niang2": "娘",
    "niang4": "酿",
    "niao3": "鸟",
    "niao4": "尿",
    "nie1": "捏",
    "nie4": "聂镊孽",
    "nin2": "您",
    "ning2": "宁凝拧柠",
    "ning4": "泞",
    "niu2": "牛",
    "niu3": "扭纽钮",
    "nong2": "农浓脓",
    "nong4": "弄",
    "nu2": "奴",
    "nu3": "努",
    "nu4": "怒",
    "nuan3": "暖",
    "nuo2": "挪",
    "nuo4": "诺懦糯",
    "nv3": "女",
    "nve4": "虐疟",
    "o4": "哦",
    "ou1": "欧鸥殴",
    "ou3": "偶呕藕",
    "pa1": "趴啪",
    "pa2": "爬扒",
    "pa4": "怕帕",
    "pai1": "拍",
    "pai2": "排牌徘",
    "pai4": "派",
    "pan1": "攀潘",
    "pan2": "盘蹒",
    "pan4": "判盼叛畔",
    "pang1": "乓",
    "pang2": "旁庞螃",
    "pang4": "胖",
    "pao1": "抛",
    "pao2": "袍刨咆",
    "pao3": "跑",
    "pao4": "炮泡",
    "pei1": "胚",
    "pei2": "陪培赔",
    "pei4": "配佩沛",
    "pen1": "喷",
    "pen2": "盆",
    "peng1": "烹砰",
    "peng2": "朋鹏棚蓬膨彭",
    "peng3": "捧",
    "peng4": "碰",
    "pi1": "批披劈坯霹",
    "pi2": "皮疲脾啤琵",
    "pi3": "匹痞",
    "pi4": "辟僻屁譬",
    "pian1": "篇偏",
    "pian4": "片骗",
    "piao1": "飘漂",
    "piao4": "票",
    "pie1": "瞥撇",
    "pin1": "拼",
    "pin2": "贫频聘",
    "pin3": "品",
    "ping1": "乒",
    "ping2": "平评瓶凭萍苹屏",
    "po1": "坡泼颇",
    "po2": "婆",
    "po4": "破迫魄粕",
    "pou1": "剖",
    "pu1": "铺扑仆",
    "pu2": "菩葡蒲",
    "pu3": "普谱朴圃",
    "pu4": "瀑",
    "qi1": "七期妻欺漆戚凄沏",
    "qi2": "其奇齐骑旗棋歧祈脐崎",
    "qi3": "起企启岂乞",
    "qi4": "气器汽弃泣砌迄",
    "qia1": "掐",
    "qia4": "恰洽",
    "qian1": "千签牵铅谦迁钎仟",
    "qian2": "前钱潜钳乾黔",
    "qian3": "浅遣谴",
    "qian4": "欠歉嵌",
    "qiang1": "枪腔呛",
    "qiang2": "强墙",
    "qiang3": "抢",
    "qiao1": "敲悄锹跷",
    "qiao2": "桥瞧乔侨翘憔",
    "qiao3": "巧",
    "qiao4": "俏窍撬",
    "qie1": "切",
    "qie2": "茄",
    "qie3": "且",
    "qie4": "窃怯惬",
    "qin1": "亲侵钦",
    "qin2": "琴勤秦禽芹擒",
    "qin3": "寝",
    "qing1": "清轻青倾氢蜻卿",
    "qing2": "情晴擎",
    "qing3": "请顷",
    "qing4": "庆",
    "qiong2": "穷琼",
    "qiu1": "秋丘邱",
    "qiu2": "求球囚酋",
    "qu1": "区曲趋驱屈躯岖",
    "qu2": "渠",
    "qu3": "取娶",
    "qu4": "去趣",
    "quan1": "圈",
    "quan2": "全权泉拳痊诠",
    "quan3": "犬",
    "quan4": "劝券",
    "que1": "缺",
    "que2": "瘸",
    "que4": "却确雀鹊",
    "qun2": "群裙",
})

PINYIN.update({
    "ran2": "然燃髯",
    "ran3": "染冉",
    "rang2": "瓤",
    "rang3": "嚷壤攘",
    "rang4": "让",
    "rao2": "饶",
    "rao3": "扰",
    "rao4": "绕",
    "re3": "惹",
    "re4": "热",
    "ren2": "人仁",
    "ren3": "忍",
    "ren4": "认任刃韧纫妊",
    "reng1": "扔",
    "reng2": "仍",
    "ri4": "日",
    "rong2": "容荣融绒溶熔蓉榕戎茸",
    "rou2": "柔揉",
    "rou4": "肉",
    "ru2": "如儒蠕茹",
    "ru3": "乳辱汝",
    "ru4": "入褥",
    "ruan3": "软阮",
    "rui4": "瑞锐睿",
    "run4": "润闰",
    "ruo4": "若弱",
    "sa1": "撒",
    "sa3": "洒",
    "sa4": "萨飒",
    "sai1": "塞腮",
    "sai4": "赛",
    "san1": "三叁",
    "san3": "伞散",
    "sang1": "桑丧",
    "sang3": "嗓",
    "sao1": "骚搔缫",
    "sao3": "扫嫂",
    "se4": "色涩瑟",
    "sen1": "森",
    "seng1": "僧",
    "sha1": "杀沙纱砂鲨煞",
    "sha3": "傻",
    "sha4": "厦霎",
    "shai1": "筛",
    "shai4": "晒",
    "shan1": "山删衫珊扇煽杉姗",
    "shan3": "闪陕",
    "shan4": "善擅膳赡汕",
    "shang1": "商伤",
    "shang3": "赏晌",
    "shang4": "上尚",
    "shang5": "裳",
    "shao1": "烧稍捎梢",
    "shao2": "勺",
    "shao3": "少",
    "shao4": "绍哨邵",
    "she1": "奢赊",
    "she2": "蛇舌",
    "she3": "舍",
    "she4": "设社射摄涉赦",
    "shen1": "身深申伸绅呻",
    "shen2": "什神",
    "shen3": "审沈婶",
    "shen4": "甚肾慎渗",
    "sheng1": "生声升牲甥",
    "sheng2": "绳",
    "sheng3": "省",
    "sheng4": "胜圣盛剩",
    "shi1": "师诗失湿狮施尸虱",
    "shi2": "十时实石识食蚀拾",
    "shi3": "使史始驶屎矢",
    "shi4": "是事市世士示式视试室势适释饰氏逝誓嗜侍恃",
    "shou1": "收",
    "shou3": "手首守",
    "shou4": "受授售瘦兽寿狩",
    "shu1": "书输殊舒叔蔬梳疏枢淑",
    "shu2": "熟赎",
    "shu3": "属鼠薯暑署蜀",
    "shu4": "术树束述竖恕墅漱数",
    "shua1": "刷",
    "shua3": "耍",
    "shuai1": "衰摔",
    "shuai4": "帅",
    "shuan1": "栓拴",
    "shuang1": "双霜",
    "shuang3": "爽",
    "shui2": "谁",
    "shui3": "水",
    "shui4": "睡税",
    "shun4": "顺瞬舜",
    "shuo1": "说",
    "shuo4": "硕烁朔",
    "si1": "思私司丝斯撕嘶厮",
    "si3": "死",
    "si4": "四似寺饲肆伺祀",
    "song1": "松嵩",
    "song3": "耸",
    "song4": "送宋颂诵讼",
    "sou1": "搜艘",
    "sou4": "嗽",
    "su1": "苏酥",
    "su2": "俗",
    "su4": "素速诉肃宿塑溯",
    "suan1": "酸",
    "suan4": "算蒜",
    "sui1": "虽",
    "sui2": "随隋",
    "sui4": "岁碎穗遂隧",
    "sun1": "孙",
    "sun3": "损笋",
    "suo1": "缩梭唆嗦",
    "suo3": "所索锁琐",
    "ta1": "他她它塌",
    "ta3": "塔",
    "ta4": "踏榻",
    "tai1": "胎",
    "tai2": "台抬苔",
    "tai4": "太态泰汰",
    "tan1": "贪摊滩瘫",
    "tan2": "谈坛痰潭檀谭",
    "tan3": "坦毯忐",
    "tan4": "探叹炭碳",
    "tang1": "汤",
    "tang2": "堂糖塘唐膛螳",
    "tang3": "躺倘",
    "tang4": "烫趟",
    "tao1": "掏涛滔",
    "tao2": "逃桃陶淘萄",
    "tao3": "讨",
    "tao4": "套",
    "te4": "特",
    "teng2": "疼腾藤誊",
    "ti1": "踢梯剔",
    "ti2": "提题蹄啼",
    "ti3": "体",
    "ti4": "替剃涕惕屉",
    "tian1": "天添",
    "tian2": "田甜填",
    "tian3": "舔",
    "tiao1": "挑",
    "tiao2": "条迢",
    "tiao4": "跳眺",
    "tie1": "贴",
    "tie3": "铁",
    "tie4": "帖",
    "ting1": "听厅",
    "ting2": "停庭亭廷蜓婷",
    "ting3": "挺艇",
    "tong1": "通",
    "tong2": "同铜童桐瞳彤",
    "tong3": "统桶筒捅",
    "tong4": "痛",
    "tou1": "偷",
    "tou2": "头投",
    "tou4": "透",
    "tu1": "突秃凸",
    "tu2": "图途涂徒屠",
    "tu3": "土吐",
    "tu4": "兔",
    "tuan2": "团",
    "tui1": "推",
    "tui3": "腿",
    "tui4": "退褪",
    "tun1": "吞",
    "tun2": "屯臀",
    "tuo1": "托脱拖",
    "tuo2": "驼陀驮",
    "tuo3": "妥椭",
    "tuo4": "拓唾",
    "wa1": "挖蛙娃洼",
    "wa3": "瓦",
    "wa4": "袜",
    "wai1": "歪",
    "wai4": "外",
    "wan1": "弯湾豌蜿",
    "wan2": "完玩丸顽",
    "wan3": "晚碗挽婉惋皖",
    "wan4": "万腕",
    "wang1": "汪",
    "wang2": "王亡",
    "wang3": "往网枉惘魍",
    "wang4": "忘望旺妄",
    "wei1": "危威微巍偎",
    "wei2": "为围维违唯惟桅",
    "wei3": "伟委伪尾纬萎娓",
    "wei4": "位未味卫谓喂胃慰魏畏蔚",
    "wen1": "温瘟",
    "wen2": "文闻蚊纹",
    "wen3": "稳吻紊",
    "wen4": "问",
    "weng1": "翁嗡",
    "wo1": "窝蜗",
    "wo3": "我",
    "wo4": "握卧沃",
    "wu1": "屋乌污巫呜钨诬",
    "wu2": "无吴梧芜",
    "wu3": "五午舞武伍侮捂",
    "wu4": "物务误悟雾勿晤戊",
    "xi1": "西吸希息析稀悉溪锡牺熙膝昔惜夕晰熄",
    "xi2": "习席袭媳",
    "xi3": "洗喜",
    "xi4": "系细戏隙",
    "xia1": "瞎虾",
    "xia2": "峡狭霞辖侠暇",
    "xia4": "下夏吓",
    "xian1": "先鲜仙掀纤",
    "xian2": "闲贤弦咸嫌衔",
    "xian3": "显险",
    "xian4": "现线县限献宪陷馅羡腺",
    "xiang1": "相香乡箱厢湘镶",
    "xiang2": "详祥翔",
    "xiang3": "想响享",
    "xiang4": "向象像项巷橡",
    "xiao1": "消销萧宵削硝潇",
    "xiao3": "小晓",
    "xiao4": "笑效校孝肖",
    "xie1": "些歇楔",
    "xie2": "鞋协斜邪携挟谐",
    "xie3": "写",
    "xie4": "谢卸泄泻屑械懈蟹",
    "xin1": "心新辛欣薪芯锌",
    "xin4": "信",
    "xing1": "星兴腥猩",
    "xing2": "行形型刑",
    "xing3": "醒",
    "xing4": "性姓幸杏",
    "xiong1": "胸兄凶汹",
    "xiong2": "雄熊",
    "xiu1": "休修羞",
    "xiu4": "秀袖绣嗅锈",
    "xu1": "需须虚嘘墟",
    "xu2": "徐",
    "xu3": "许栩",
    "xu4": "续序绪蓄叙酗婿",
    "xuan1": "宣喧轩",
    "xuan2": "悬旋玄",
    "xuan3": "选",
    "xuan4": "炫绚眩",
    "xue1": "靴薛",
    "xue2": "学穴",
    "xue3": "雪",
    "xue4": "血",
    "xun1": "熏勋",
    "xun2": "寻询巡循旬",
    "xun4": "训迅讯逊驯汛",
    "ya1": "压鸭押",
    "ya2": "牙芽崖涯",
    "ya3": "哑雅",
    "ya4": "亚轧",
    "yan1": "烟淹湮咽嫣",
    "yan2": "言严研颜沿炎盐岩延阎蜒檐",
    "yan3": "眼演掩衍奄",
    "yan4": "验厌宴艳焰雁唁砚燕",
    "yang1": "央秧殃",
    "yang2": "阳羊洋杨扬",
    "yang3": "养氧仰痒",
    "yang4": "样",
    "yao1": "腰邀妖",
    "yao2": "摇遥谣姚窑尧",
    "yao3": "咬",
    "yao4": "要药耀钥",
    "ye1": "椰噎",
    "ye2": "爷",
    "ye3": "也野冶",
    "ye4": "业夜叶页液腋",
    "yi1": "一衣医依伊壹",
    "yi2": "移疑仪宜姨遗夷胰颐",
    "yi3": "已以椅乙蚁倚",
    "yi4": "意义异议亿艺忆译易逸疫役毅谊屹奕翼溢抑益",
    "yin1": "因音阴姻茵殷",
    "yin2": "银吟淫寅",
    "yin3": "引饮隐瘾",
    "yin4": "印",
    "ying1": "应英鹰婴樱鹦莺",
    "ying2": "迎营赢蝇萤荧盈",
    "ying3": "影颖",
    "ying4": "硬映",
    "yo1": "哟",
    "yong1": "拥庸佣臃",
    "yong3": "永勇涌泳咏蛹踊",
    "yong4": "用",
    "you1": "优悠忧幽",
    "you2": "由游油邮尤犹铀鱿",
    "you3": "有友酉",
    "you4": "又右幼诱柚",
    "yu1": "迂淤",
    "yu2": "于鱼余愚娱渔愉逾渝榆舆",
    "yu3": "与语雨宇羽屿",
    "yu4": "玉育遇欲狱预域郁寓裕誉浴御豫愈鹬",
    "yuan1": "冤鸳渊",
    "yuan2": "元员原圆园源缘援袁猿垣",
    "yuan3": "远",
    "yuan4": "院愿怨苑",
    "yue1": "约曰",
    "yue4": "月越阅跃岳悦粤",
    "yun1": "晕",
    "yun2": "云匀芸",
    "yun3": "允陨",
    "yun4": "运韵孕酝蕴",
    "za2": "杂砸",
    "zai1": "灾栽",
    "zai3": "宰载",
    "zai4": "再在",
    "zan2": "咱",
    "zan3": "攒",
    "zan4": "赞暂",
    "zang1": "脏",
    "zang4": "葬",
    "zao1": "遭糟",
    "zao2": "凿",
    "zao3": "早澡枣藻",
    "zao4": "造燥灶躁皂噪",
    "ze2": "则责泽择",
    "zei2": "贼",
    "zen3": "怎",
    "zeng1": "增憎",
    "zeng4": "赠",
    "zha1": "扎渣",
    "zha2": "闸铡",
    "zha3": "眨",
    "zha4": "诈榨乍栅炸",
    "zhai1": "摘斋",
    "zhai2": "宅",
    "zhai3": "窄",
    "zhai4": "债寨",
    "zhan1": "沾瞻毡",
    "zhan3": "展斩崭盏",
    "zhan4": "站战占栈绽湛",
    "zhang1": "张章彰樟",
    "zhang3": "涨掌",
    "zhang4": "丈帐障胀仗杖账",
    "zhao1": "招昭",
    "zhao3": "找沼爪",
    "zhao4": "照赵罩兆召",
    "zhe1": "遮",
    "zhe2": "折哲辙",
    "zhe3": "者",
    "zhe4": "这浙蔗",
    "zhe5": "着",
    "zhen1": "真针珍贞侦斟榛砧",
    "zhen3": "诊枕",
    "zhen4": "镇阵震振赈",
    "zheng1": "争征蒸睁挣狰筝怔",
    "zheng3": "整拯",
    "zheng4": "正政证郑症",
    "zhi1": "之知支只枝织汁芝肢脂蜘吱",
    "zhi2": "直值职植执侄殖",
    "zhi3": "指纸止址旨趾",
    "zhi4": "制治质致置志智至秩滞稚挚掷峙窒",
    "zhong1": "中钟终忠衷盅",
    "zhong3": "种肿",
    "zhong4": "重众仲",
    "zhou1": "周州洲舟粥",
    "zhou2": "轴",
    "zhou4": "皱宙昼骤咒",
    "zhu1": "猪朱珠株诸蛛",
    "zhu2": "竹逐烛",
    "zhu3": "主煮嘱瞩",
    "zhu4": "住助注祝著筑驻柱铸贮蛀",
    "zhua1": "抓",
    "zhuan1": "专砖",
    "zhuan3": "转",
    "zhuan4": "赚撰",
    "zhuang1": "装庄桩妆",
    "zhuang4": "状壮撞",
    "zhui1": "追锥",
    "zhui4": "坠缀赘",
    "zhun3": "准",
    "zhuo1": "桌捉",
    "zhuo2": "卓灼浊酌啄琢",
    "zi1": "资姿滋咨兹",
    "zi3": "子紫仔籽",
    "zi4": "自字",
    "zong1": "宗综踪棕",
    "zong3": "总",
    "zong4": "纵粽",
    "zou3": "走",
    "zou4": "奏揍",
    "zu1": "租",
    "zu2": "足族卒",
    "zu3": "组阻祖",
    "zuan1": "钻",
    "zui3": "嘴",
    "zui4": "最罪醉",
    "zun1": "尊遵",
    "zuo2": "昨",
    "zuo3": "左佐",
    "zuo4": "做座坐作",
})

# ---------------------------------------------------------------------------
# Pinyin syllable to bopomofo. Initials and finals compose; whole-syllable
# spellings (yi, wu, yu...) and the zero-initial forms are table entries.
# ---------------------------------------------------------------------------

_INITIALS = [
    ("zh", "ㄓ"), ("ch", "ㄔ"), ("sh", "ㄕ"),
    ("b", "ㄅ"), ("p", "ㄆ"), ("m", "ㄇ"), ("f", "ㄈ"),
    ("d", "ㄉ"), ("t", "ㄊ"), ("n", "ㄋ"), ("l", "ㄌ"),
    ("g", "ㄍ"), ("k", "ㄎ"), ("h", "ㄏ"),
    ("j", "ㄐ"), ("q", "ㄑ"), ("x", "ㄒ"),
    ("r", "ㄖ"), ("z", "ㄗ"), ("c", "ㄘ"), ("s", "ㄙ"),
]

_FINALS = {
    "a": "ㄚ", "o": "ㄛ", "e": "ㄜ", "ai": "ㄞ", "ei": "ㄟ", "ao": "ㄠ",
    "ou": "ㄡ", "an": "ㄢ", "en": "ㄣ", "ang": "ㄤ", "eng": "ㄥ", "er": "ㄦ",
    "i": "ㄧ", "ia": "ㄧㄚ", "ie": "ㄧㄝ", "iao": "ㄧㄠ", "iu": "ㄧㄡ",
    "ian": "ㄧㄢ", "in": "ㄧㄣ", "iang": "ㄧㄤ", "ing": "ㄧㄥ", "iong": "ㄩㄥ",
    "u": "ㄨ", "ua": "ㄨㄚ", "uo": "ㄨㄛ", "uai": "ㄨㄞ", "ui": "ㄨㄟ",
    "uan": "ㄨㄢ", "un": "ㄨㄣ", "uang": "ㄨㄤ", "ong": "ㄨㄥ",
    "v": "ㄩ", "ve": "ㄩㄝ", "van": "ㄩㄢ", "vn": "ㄩㄣ",
}

# Syllables spelled as a unit. Covers the y/w spellings and the apical
# zhi/chi/shi/ri/zi/ci/si row, whose final is silent in bopomofo.
_WHOLE = {
    "zhi": "ㄓ", "chi": "ㄔ", "shi": "ㄕ", "ri": "ㄖ",
    "zi": "ㄗ", "ci": "ㄘ", "si": "ㄙ",
    "yi": "ㄧ", "ya": "ㄧㄚ", "ye": "ㄧㄝ", "yao": "ㄧㄠ", "you": "ㄧㄡ",
    "yan": "ㄧㄢ", "yin": "ㄧㄣ", "yang": "ㄧㄤ", "ying": "ㄧㄥ", "yo": "ㄧㄛ",
    "yong": "ㄩㄥ", "yu": "ㄩ", "yue": "ㄩㄝ", "yuan": "ㄩㄢ", "yun": "ㄩㄣ",
    "wu": "ㄨ", "wa": "ㄨㄚ", "wo": "ㄨㄛ", "wai": "ㄨㄞ", "wei": "ㄨㄟ",
    "wan": "ㄨㄢ", "wen": "ㄨㄣ", "wang": "ㄨㄤ", "weng": "ㄨㄥ",
    "a": "ㄚ", "o": "ㄛ", "e": "ㄜ", "ai": "ㄞ", "ei": "ㄟ", "ao": "ㄠ",
    "ou": "ㄡ", "an": "ㄢ", "en": "ㄣ", "ang": "ㄤ", "er": "ㄦ", "n": "ㄣ",
}


def pinyin_to_zhuyin(syllable: str) -> str:
    """Bopomofo spelling of one toneless pinyin syllable."""
    if syllable in _WHOLE:
        return _WHOLE[syllable]
    for latin, bopo in _INITIALS:
        if syllable.startswith(latin):
            final = syllable[len(latin):]
            # After j/q/x a written u is the umlaut vowel.
            if latin in ("j", "q", "x") and final.startswith("u"):
                final = "v" + final[1:]
            if final == "ue":
                final = "ve"
            out = _FINALS.get(final)
            if out is None:
                raise ValueError(f"cannot convert final {final!r} of {syllable!r}")
            return bopo + out
    raise ValueError(f"cannot convert syllable {syllable!r}")


# ---------------------------------------------------------------------------
# Glyph tables. Deliberately small and hand-checked; characters outside a
# glyph table fall back to byte forms at encode time. Stroke letters:
# h horizontal, s vertical, p left-falling, n dot or right-falling, z turn.
# ---------------------------------------------------------------------------

STROKE: dict[str, str] = {
    "一": "h", "二": "hh", "三": "hhh", "十": "hs", "七": "hz", "八": "pn",
    "九": "pz", "人": "pn", "入": "pn", "儿": "pz", "几": "pz", "了": "zs",
    "力": "zp", "刀": "zp", "又": "zn", "大": "hpn", "小": "spn", "口": "szh",
    "山": "szs", "川": "pss", "工": "hsh", "土": "hsh", "士": "hsh",
    "才": "hsp", "寸": "hsn", "下": "hsn", "上": "shh", "万": "hzp",
    "个": "pns", "勺": "pzn", "久": "pzn", "及": "pzn", "夕": "pzn",
    "亡": "nhz", "门": "nsz", "义": "npn", "之": "nzn", "广": "nhp",
    "已": "zhz", "己": "zhz", "子": "zsh", "卫": "zsh", "也": "zsz",
    "女": "zph", "飞": "zpn", "刃": "zpn", "习": "znh", "马": "zzh",
    "乡": "zzp", "千": "phs", "于": "hhs", "干": "hhs", "亏": "hhz",
    "与": "hzh", "叉": "znn", "亿": "psz",
    "丰": "hhhs", "王": "hhsh", "井": "hhps", "开": "hhps", "天": "hhpn",
    "夫": "hhpn", "元": "hhpz", "无": "hhpz", "云": "hhzn", "专": "hhzn",
    "廿": "hssh", "木": "hspn", "五": "hszh", "支": "hszn",
    "不": "hpsn", "太": "hpnn", "犬": "hpnn", "区": "hpnz", "历": "hpzp",
    "友": "hpzn", "尤": "hpzn", "匹": "hpzz", "车": "hzhs", "巨": "hzhz",
    "牙": "hzsp", "戈": "hzpn", "比": "hzpz", "互": "hzzh",
    "切": "hzzp", "瓦": "hzzn", "止": "shsh", "日": "szhh",
    "中": "szhs", "内": "szpn", "水": "szpn", "贝": "szpn", "见": "szpz",
    "手": "phhs", "午": "phhs", "牛": "phhs", "毛": "phhz", "气": "phhz",
    "升": "phps", "长": "phzn", "仁": "pshh", "什": "pshs", "片": "pshz",
    "仆": "pssn", "化": "pspz", "仇": "pspz", "币": "pszs", "仍": "pszp",
    "仅": "pszn", "斤": "pphs", "爪": "ppsn", "介": "pnps",
    "父": "pnpn", "从": "pnpn", "今": "pnnz", "凶": "pnzs", "分": "pnzp",
    "公": "pnzn", "仓": "pnzz", "月": "pzhh", "氏": "pzhz", "勿": "pzpp",
    "欠": "pzpn", "风": "pzpn", "丹": "pznh", "乌": "pzzh",
    "勾": "pzzn", "凤": "pzzn", "六": "nhpn", "文": "nhpn", "方": "nhzp",
    "火": "nppn", "为": "npzn", "斗": "nnhs", "忆": "nnsz", "订": "nzhs",
    "计": "nzhs", "户": "nzhp", "心": "nznn", "尺": "zhpn", "引": "zhzs",
    "巴": "zshz", "孔": "zshz", "队": "zspn", "办": "zpnn",
    "以": "znpn", "允": "znpz", "劝": "znzp", "双": "znzn",
    "书": "zzsn", "玉": "hhshn",
    "未": "hhspn", "末": "hhspn", "示": "hhspn",
    "打": "hshhs", "巧": "hshhz", "正": "hshsh", "扑": "hshsn",
    "扒": "hshpn", "功": "hshzp", "扔": "hshzp", "去": "hshzn",
    "甘": "hsshh", "世": "hsshz", "古": "hsszh", "节": "hsszs",
    "本": "hspnh", "术": "hspnn", "可": "hszhs", "丙": "hszpn",
    "左": "hphsh", "厉": "hphzp", "石": "hpszh", "右": "hpszh",
    "布": "hpszs", "龙": "hpzpn", "灭": "hnppn",
    "轧": "hzhsz", "东": "hzspn", "且": "szhhh", "目": "szhhh",
    "叶": "szhhs", "甲": "szhhs", "申": "szhhs", "号": "szhhz",
    "电": "szhhz", "田": "szhsh", "由": "szhsh", "史": "szhpn",
    "只": "szhpn", "央": "szhpn", "兄": "szhpz", "叼": "szhzh",
    "叫": "szhzs", "另": "szhzp", "叹": "szhzn", "四": "szpzh",
    "生": "phhsh", "失": "phhpn", "禾": "phspn",
    "付": "pshsn", "仗": "pshpn", "代": "pshzn", "仙": "psszs",
    "们": "psnsz", "仪": "psnpn", "白": "pszhh", "仔": "pszsh",
    "他": "pszsz", "斥": "pphsn", "瓜": "ppznn",
    "丛": "pnpnh", "用": "pzhhs", "甩": "pzhhz",
    "乐": "pzspn", "句": "pzszh", "匆": "pzppn",
    "册": "pzpzh", "外": "pznsn", "处": "pznsn",
    "冬": "pznnn", "鸟": "pznzh", "务": "pznzp", "包": "pzzhz",
    "饥": "pzzpz", "主": "nhhsh", "市": "nhszs", "立": "nhnph",
    "闪": "nszpn", "兰": "nphhh", "半": "nphhs", "汁": "nnhhs",
    "汇": "nnhhz", "头": "nnhpn", "汉": "nnhzn", "宁": "nnzhs",
    "它": "nnzpz", "讨": "nzhsn", "写": "nzhzh", "让": "nzshh",
    "礼": "nzsnz", "训": "nzpss", "必": "nznpn", "议": "nznpn",
    "记": "nzzhz", "永": "nzzpn", "司": "zhszh",
    "尼": "zhppz", "民": "zhzhz", "辽": "zsnzn",
    "奶": "zphzp", "奴": "zphzn", "加": "zpszh", "召": "zpszh",
    "皮": "zpszn", "边": "zpnzn", "发": "zpznn", "圣": "znhsh",
    "对": "znhsn", "台": "znszh", "纠": "zzhzs",
    "母": "zznhn", "幼": "zznzp", "丝": "zzzzh",
    "鬼": "pszhshpzzn", "魅": "pszhshpzznhhspn",
    "魑": "pszhshpzznnhpnzsszshn",
}

WUBI: dict[str, str] = {
    "魑": "rqcc", "魅": "rqci", "魍": "rqcn", "魉": "rqcw",
    "王": "gggg", "土": "ffff", "大": "dddd", "木": "ssss", "工": "aaaa",
    "目": "hhhh", "日": "jjjj", "口": "kkkk", "田": "llll", "山": "mmmm",
    "禾": "tttt", "白": "rrrr", "月": "eeee", "人": "wwww", "金": "qqqq",
    "言": "yyyy", "立": "uuuu", "水": "iiii", "火": "oooo", "之": "pppp",
    "已": "nnnn", "子": "bbbb", "女": "vvvv", "又": "cccc",
    "的": "rqyy", "我": "trnt", "你": "wqiy", "好": "vbg", "了": "bnh",
    "在": "dhfd", "不": "gii", "一": "ggll", "是": "jghu", "有": "def",
}

ZHENGMA: dict[str, str] = {
    "魑": "njlz", "魅": "njbk", "魍": "njld", "魉": "njoo",
}

CANGJIE: dict[str, str] = {
    "魑": "hiyub", "魅": "hijd", "魍": "hibtv", "魉": "himob",
    "日": "a", "月": "b", "金": "c", "木": "d", "水": "e", "火": "f",
    "土": "g", "大": "k", "中": "l", "一": "m", "人": "o", "心": "p",
    "手": "q", "口": "r", "山": "u", "女": "v", "田": "w", "卜": "y",
    "明": "ab", "林": "dd", "森": "ddd", "晶": "aaa", "从": "oo",
    "众": "ooo", "好": "vnd", "休": "od", "安": "jv", "字": "jnd",
}

# ---------------------------------------------------------------------------
# Weighted word list. Bands share a sampling weight; single-character entries
# exist only for corpus synthesis and are filtered out of words.tsv, which
# keeps the shipped seed dictionary at length >= 2 per the lexicon rules.
# ---------------------------------------------------------------------------

_BANDS: list[tuple[int, str]] = [
    (900, """
的 了 是 在 不 我 有 他 她 它 这 那 就 也 都 要 会 对 能 说 着 去 上 来 到
和 与 很 但 为 被 从 把 给 让 向 等 并 或 而 之 以 于 又 再 还 只 才 更 最
们 个 年 月 日 人 中 大 小 多 少 好 新 老 高 长 前 后 里 外 下 没 你 如 用
一 二 三 四 五 六 七 八 九 十 百 千 万 亿 零 两 几 每 各 别 某 另 其 此 该
"""),
    (350, """
我们 你们 他们 自己 现在 时候 时间 今天 明天 昨天 已经 还是 可以 因为
所以 如果 虽然 但是 而且 或者 这样 那样 这里 那里 什么 怎么 没有 知道
觉得 认为 希望 需要 应该 可能 一定 非常 真的 问题 工作 学习 生活 东西
事情 地方 朋友 老师 学生 孩子 父母 家庭 公司 学校 医院 城市 农村 国家
世界 社会 经济 政治 文化 历史 科学 技术 教育 环境 市场 企业 政府 部门
单位 服务 管理 发展 建设 改革 开放 研究 分析 调查 报告 计划 项目 目标
结果 原因 影响 作用 关系 情况 条件 标准 水平 质量 数量 价格 成本 收入
利润 资金 投资 银行 货币 贸易 产品 生产 消费 销售 购买 使用 提供 帮助
支持 合作 交流 沟通 讨论 决定 选择 参加 组织 活动 会议 比赛 运动 音乐
电影 艺术 文学 作品 小说 故事 新闻 媒体 网络 信息 数据 系统 软件 程序
设计 开发 测试 安全 健康 医生 病人 药品 治疗 身体 心理 感情 爱情 婚姻
幸福 快乐 痛苦 困难 成功 失败 努力 坚持 放弃 改变 提高 增加 减少 扩大
开始 结束 继续 停止 进行 完成 实现 达到 超过 保持 保护 保证 要求 规定
法律 制度 政策 措施 方法 方式 手段 过程 阶段 基础 重点 特点 优势 缺点
错误 正确 重要 主要 基本 全面 具体 特别 一般 普通 简单 复杂 容易 方便
直接 间接 共同 不同 相同 类似 明显 显然 当然 必须 必要 主张 观点 意见
建议 批评 表扬 鼓励 反对 同意 接受 拒绝 承认 否认 解释 说明 介绍 描述
表示 表达 表现 发现 发明 创造 创新 想象 记忆 忘记 理解 掌握 了解 熟悉
"""),
    (150, """
电脑 手机 电话 电视 汽车 火车 飞机 地铁 公路 铁路 房子 房间 厨房 桌子
椅子 窗户 门口 街道 商店 超市 餐厅 饭店 宾馆 公园 广场 图书馆 博物馆
办公室 实验室 研究所 大学生 中学生 小学生 老百姓 计算机 互联网
人工智能 操作系统 数据库 工程师 科学家 艺术家 音乐家 作家 记者 律师
警察 司机 工人 农民 商人 经理 主任 领导 同事 同学 邻居 亲戚 兄弟 姐妹
爷爷 奶奶 叔叔 阿姨 丈夫 妻子 儿子 女儿 婴儿 青年 中年 老年 男人 女人
喜欢 讨厌 担心 害怕 高兴 难过 生气 奇怪 漂亮 美丽 聪明 勤奋 诚实 勇敢
冷静 紧张 兴奋 失望 满意 骄傲 谦虚 热情 温暖 寒冷 凉快 炎热 干燥 潮湿
明亮 黑暗 安静 热闹 干净 整齐 混乱 新鲜 便宜 昂贵 富裕 贫穷 强大 弱小
宽阔 狭窄 深刻 浅显 遥远 附近 迅速 缓慢 突然 逐渐 偶尔 经常 总是 从来
立刻 马上 刚才 后来 最近 将来 过去 未来 当时 同时 暂时 永远 终于 竟然
居然 果然 似乎 好像 大概 也许 几乎 完全 十分 相当 稍微 略微 越来越
不断 仍然 依然 始终 曾经 早就 正在 即将 刚刚 恰好 正好 难免 毕竟 反正
吃饭 喝水 睡觉 起床 洗澡 穿衣 走路 跑步 游泳 爬山 唱歌 跳舞 画画 写字
读书 看书 听课 上课 下课 考试 毕业 工资 奖金 价值 意义 目的 理由 根据
证据 事实 真相 秘密 消息 通知 命令 任务 责任 义务 权利 权力 地位 身份
名字 姓名 年龄 性别 职业 地址 邮件 电报 信件 包裹 礼物 纪念 回忆 梦想
理想 愿望 兴趣 爱好 习惯 传统 风俗 礼貌 道德 精神 思想 智慧 知识 经验
教训 能力 水准 才能 天才 人才 专家 学者 教授 博士 硕士 学士 文凭 证书
"""),
    (90, """
准备 安排 练习 复习 预习 检查 修理 维修 安装 拆除 建造 装修 搬家 整理
打扫 清洁 收拾 储存 保存 保留 删除 记录 登记 注册 申请 批准 审查 审核
拍照 摄影 录音 录像 播放 直播 转发 评论 点赞 关注 订阅 浏览 搜索 下载
上传 登录 退出 充电 断电 开机 关机 死机 重启 升级 更新 备份 恢复 加密
解密 编程 编译 调试 运行 部署 联网 断网 信号 带宽 内存 硬盘 屏幕 键盘
鼠标 耳机 音响 相机 镜头 电池 充电器 路由器 服务器 浏览器 操作 界面
菜单 按钮 图标 窗口 文件 文档 表格 图片 视频 音频 文本 字体 段落 标题
目录 索引 附录 注释 引用 翻译 词典 语法 词汇 发音 口语 听力 阅读 写作
作文 论文 期刊 杂志 报纸 书籍 课本 教材 讲义 笔记 作业 练习册 试卷
成绩 分数 排名 名次 冠军 亚军 季军 奖牌 金牌 银牌 铜牌 纪录 裁判 教练
队员 球队 球场 球迷 门票 观众 演员 导演 舞台 剧场 剧院 乐队 乐器 钢琴
小提琴 吉他 鼓手 歌手 歌曲 歌词 旋律 节奏 和声 音符
"""),
    (60, """
苹果 香蕉 葡萄 西瓜 牛奶 面包 米饭 面条 鸡蛋 猪肉 牛肉 羊肉 蔬菜 水果
茶叶 咖啡 啤酒 白酒 太阳 月亮 星星 天空 白云 大海 河流 高山 森林 草原
沙漠 土地 石头 金属 玻璃 塑料 木头 纸张 布料 春天 夏天 秋天 冬天 天气
气候 温度 湿度 风雨 雷电 冰雪 霜冻 雾气 彩虹 日出 日落 黎明 黄昏 深夜
中午 早晨 晚上 上午 下午 星期 周末 假期 节日 春节 国庆 元旦 中秋 清明
生日 婚礼 葬礼 仪式 典礼 庆祝 祝贺 问候 拜访 接待 招待 宴请 聚会 约会
动物 植物 昆虫 鸟类 鱼类 老虎 狮子 大象 猴子 熊猫 兔子 老鼠 黄牛 绵羊
骏马 猎狗 家猫 公鸡 鸭子 鹅毛 蛇皮 青蛙 蝴蝶 蜜蜂 蚂蚁 蚊子 苍蝇 蜘蛛
树木 树叶 树枝 树根 花朵 花园 草地 种子 果实 庄稼 小麦 水稻 玉米 大豆
棉花 蘑菇 竹子 梅花 兰花 菊花 荷花 桃花 樱花 松树 柳树 杨树 枫叶 银杏
脑袋 眼睛 鼻子 嘴巴 耳朵 眉毛 头发 牙齿 舌头 喉咙 脖子 肩膀 胳膊 手指
手掌 大腿 膝盖 脚步 皮肤 骨头 肌肉 血液 心脏 肝脏 肠胃 神经 细胞 基因
感冒 发烧 咳嗽 头疼 疾病 症状 诊断 手术 住院 出院 药方 针灸 按摩 康复
锻炼 营养 维生素 蛋白质 脂肪 糖分 盐分 热量 卡路里 新陈代谢 免疫力
衣服 裤子 裙子 衬衫 外套 毛衣 帽子 鞋子 袜子 手套 围巾 领带 眼镜 手表
戒指 项链 钱包 背包 行李 雨伞 钥匙 锁头 镜子 梳子 牙刷 毛巾 肥皂 香水
"""),
    (25, """
一心一意 三心二意 四面八方 五颜六色 七上八下 十全十美 乱七八糟
自言自语 有说有笑 大惊小怪 小题大做 东奔西走 南来北往 左思右想
前因后果 里应外合 天长地久 地大物博 人山人海 日新月异 水到渠成
火上浇油 实事求是 精益求精 千方百计 万无一失 半途而废 全力以赴
自由自在 无能为力 不知不觉 理所当然 莫名其妙 四通八达 一帆风顺
风和日丽 鸟语花香 山清水秀 春暖花开 秋高气爽 冰天雪地 狂风暴雨
电闪雷鸣 汗流浃背 心平气和 心急如焚 喜出望外 怒气冲冲 哭笑不得
笑容满面 目瞪口呆 手忙脚乱 口是心非 言行一致 说一不二 一言为定
成千上万 数不胜数 独一无二 与众不同 大同小异 面目全非 焕然一新
"""),
    (10, """
魑魅魍魉 画蛇添足 对牛弹琴 井底之蛙 狐假虎威 亡羊补牢 守株待兔
刻舟求剑 掩耳盗铃 杯弓蛇影 叶公好龙 愚公移山 精卫填海 夸父追日
初生之犊 汗牛充栋 洛阳纸贵 胸有成竹 栩栩如生 画龙点睛 入木三分
铁杵成针 磨杵成针 悬梁刺股 凿壁偷光 囊萤映雪 程门立雪 孟母三迁
塞翁失马 唇亡齿寒 鹬蚌相争 渔翁得利 螳螂捕蝉 黄雀在后 狡兔三窟
"""),
]

WORDS: dict[str, int] = {}
for _w, _chunk in _BANDS:
    for _word in _chunk.split():
        if _word in WORDS:
            raise SystemExit(f"duplicate word {_word!r} in band list")
        WORDS[_word] = _w

# ---------------------------------------------------------------------------
# Corpus synthesis pools. Names and measure words compose productively so the
# corpus is not a closed vocabulary; rare characters sit outside every mapping
# table on purpose to exercise the byte fallback path.
# ---------------------------------------------------------------------------

_SURNAMES = (
    "王李张刘陈杨赵黄周吴徐孙马朱胡郭何高林罗郑梁谢宋唐许韩冯邓曹彭曾萧"
    "田董潘袁蔡蒋余杜叶程苏魏吕丁任沈姚卢姜崔钟谭陆汪范金石廖贾夏付方白"
    "孟熊秦邱江薛段雷侯龙史陶黎贺顾毛邵万钱严"
)

_GIVEN = (
    "伟芳娜敏静丽强磊军洋勇艳杰娟涛明超秀兰霞平刚桂英华玉红建文金龙飞虎"
    "欣慧佳晨阳婷雪梅琳浩宇轩博瑞泽楠萌鹏彬丹凤燕云峰康宁安乐天海江山松"
    "柏青春夏秋冬"
)

_UNITS = "年月日个元米人次件台名分秒天岁斤块条张位种层间场段页篇句字号"

_ASCII_TOKENS = [
    "GDP", "AI", "5G", "CEO", "App", "OK", "DNA", "USB", "CPU", "NBA",
    "KTV", "Python", "Java", "email", "web", "iPhone", "WiFi", "CT",
    "B2B", "Q3", "VIP", "ID", "PPT", "logo", "bug", "demo",
]

# None of these appear in any mapping table; encoding must fall back to bytes.
RARE_CHARS = "龘鱻麤䶮㵘㠭"

# Singleton tail: ideographs far outside the mapping tables, standing in for
# the long tail of character types any real corpus drags along. Almost every
# draw is a new type, so a character-level vocabulary pays one slot apiece.
_RARE_POOL_SIZE = 3000
_RARE_POOL = [chr(cp) for cp in range(0x3400, 0x3400 + _RARE_POOL_SIZE)]

# ---------------------------------------------------------------------------
# Corpus synthesis. Bag-of-words draws with a fixed seed: no collocation
# structure beyond the word level, so a tokenizer can only win by covering
# words and sub-word regularities, not by memorizing sentences. A large
# share of the text is open-class compounds: recurring pronunciation-level
# types realized by picking a homophone per syllable, the way coined terms
# and transliterations vary their spelling in real text. Their sound
# sequences recur; their character sequences mostly do not.
# ---------------------------------------------------------------------------

CORPUS_SEED = 912779
CORPUS_LINES = 10000
_COMPOUND_SEED = 33871
_HEAD_TYPES = 2500
_TAIL_TYPES = 3000


def _compound_pools() -> list[tuple[list[tuple[str, ...]], list[float]]]:
    """Two pools of compound types built over homophone groups.

    Syllables come from the homophone-rich short groups, so one type has
    at least nine spellings and usually dozens: its character sequence
    almost never repeats while its sound sequence recurs constantly.
    The head pool is two syllables and frequent; the tail pool is three
    syllables and rare, the long tail of coinages a bigger corpus sample
    would keep surfacing. Syllables and types follow Zipf-Mandelbrot
    weights (seeded shuffle detaches rank from table order; the offsets
    flatten the head and keep the tail heavy).
    """
    rng = random.Random(_COMPOUND_SEED)
    bases = {chars: base for base, chars in PINYIN.items()}
    groups = sorted(g for g in PINYIN.values() if len(g) >= 3 and len(bases[g]) <= 4)
    rng.shuffle(groups)
    syl_cum = list(itertools.accumulate(1.0 / (k + 20.0) for k in range(len(groups))))
    pools = []
    for n_types, n_syl, offset in ((_HEAD_TYPES, 2, 600.0), (_TAIL_TYPES, 3, 800.0)):
        types = [
            tuple(rng.choices(groups, cum_weights=syl_cum, k=n_syl))
            for _ in range(n_types)
        ]
        cum = list(itertools.accumulate(1.0 / (k + offset) for k in range(len(types))))
        pools.append((types, cum))
    return pools


def _draw_number(rng: random.Random) -> str:
    style = rng.random()
    if style < 0.45:
        return str(rng.randint(1, 999)) + rng.choice(_UNITS)
    if style < 0.65:
        return f"{rng.randint(1990, 2026)}年"
    if style < 0.80:
        return f"{rng.randint(1, 12)}月{rng.randint(1, 28)}日"
    if style < 0.90:
        return f"{rng.randint(1, 99)}.{rng.randint(0, 9)}%"
    return f"{rng.randint(1, 9)}万{rng.choice(_UNITS)}"


def _draw_name(rng: random.Random) -> str:
    given = rng.choice(_GIVEN)
    if rng.random() < 0.6:
        given += rng.choice(_GIVEN)
    return rng.choice(_SURNAMES) + given


def _clause(rng: random.Random, draw, draw_compound) -> str:
    parts = []
    for _ in range(rng.randint(3, 9)):
        r = rng.random()
        if r < 0.06:
            parts.append(_draw_name(rng))
        elif r < 0.14:
            parts.append(_draw_number(rng))
        elif r < 0.16:
            parts.append(rng.choice(_ASCII_TOKENS))
        elif r < 0.163:
            parts.append(rng.choice(RARE_CHARS))
        elif r < 0.166:
            parts.append(rng.choice(_RARE_POOL))
        elif r < 0.64:
            parts.append(draw_compound(0))
        elif r < 0.735:
            parts.append(draw_compound(1))
        else:
            word = draw()
            deco = rng.random()
            if deco < 0.015:
                word = f"《{word}》"
            elif deco < 0.03:
                word = f"“{word}”"
            parts.append(word)
    return "".join(parts)


def _sentence(rng: random.Random, draw, draw_compound) -> str:
    n = rng.choices([1, 2, 3], weights=[5, 4, 1])[0]
    body = "，".join(_clause(rng, draw, draw_compound) for _ in range(n))
    if rng.random() < 0.03:
        body += f"（{draw()}）"
    return body + rng.choices("。！？", weights=[8, 1, 1])[0]


def generate_corpus(seed: int = CORPUS_SEED, n_lines: int = CORPUS_LINES) -> list[str]:
    rng = random.Random(seed)
    pop = list(WORDS)
    cum = list(itertools.accumulate(WORDS[w] for w in pop))
    pools = _compound_pools()
    # Every word surfaces at least once: the opening lines cycle through the
    # shuffled list before weighted sampling takes over.
    queue = pop.copy()
    rng.shuffle(queue)
    queue.reverse()

    def draw() -> str:
        if queue:
            return queue.pop()
        return rng.choices(pop, cum_weights=cum)[0]

    def draw_compound(which: int) -> str:
        types, cum = pools[which]
        syllables = rng.choices(types, cum_weights=cum)[0]
        return "".join(rng.choice(group) for group in syllables)

    lines = []
    for _ in range(n_lines):
        n = rng.choices([1, 2], weights=[3, 2])[0]
        lines.append("".join(_sentence(rng, draw, draw_compound) for _ in range(n)))
    return lines


# ---------------------------------------------------------------------------
# Consistency checks. Anything a typo could silently break is asserted here;
# wrong-but-well-formed readings are out of reach and live in code review.
# ---------------------------------------------------------------------------


def build_pinyin_map() -> dict[str, str]:
    out: dict[str, str] = {}
    for base, chars in PINYIN.items():
        if not re.fullmatch(r"[a-z]+[1-5]", base):
            raise SystemExit(f"bad pinyin base {base!r}")
        if not chars:
            raise SystemExit(f"empty group {base!r}")
        for ch in chars:
            if ch in out:
                raise SystemExit(f"{ch!r} in both {out[ch]!r} and {base!r}")
            out[ch] = base
    return out


def build_zhuyin_map(pinyin_map: dict[str, str]) -> dict[str, str]:
    return {ch: pinyin_to_zhuyin(base[:-1]) + base[-1] for ch, base in pinyin_map.items()}


def validate(pinyin_map: dict[str, str], corpus: list[str]) -> None:
    for ch in pinyin_map:
        if not is_cjk(ch):
            raise SystemExit(f"non-CJK character {ch!r} in pinyin table")

    for name, table, pattern in [
        ("stroke", STROKE, r"[hspnz]+"),
        ("wubi", WUBI, r"[a-z]{1,5}"),
        ("zhengma", ZHENGMA, r"[a-z]{1,5}"),
        ("cangjie", CANGJIE, r"[a-z]{1,5}"),
    ]:
        for ch, base in table.items():
            if not is_cjk(ch):
                raise SystemExit(f"non-CJK character {ch!r} in {name} table")
            if not re.fullmatch(pattern, base):
                raise SystemExit(f"bad {name} base {base!r} for {ch!r}")

    covered = set(pinyin_map)
    missing = set()
    for word in WORDS:
        if not 1 <= len(word) <= 4:
            raise SystemExit(f"word length out of range: {word!r}")
        missing.update(ch for ch in word if ch not in covered)
    for pool in (_SURNAMES, _GIVEN, _UNITS):
        missing.update(ch for ch in pool if ch not in covered)
    if missing:
        raise SystemExit(f"{len(missing)} uncovered characters: {''.join(sorted(missing))}")

    for ch in (*RARE_CHARS, *_RARE_POOL):
        if not is_cjk(ch):
            raise SystemExit(f"rare character {ch!r} is not CJK")
        if ch in covered:
            raise SystemExit(f"rare character {ch!r} is covered; pick another")

    allowed = covered | set(RARE_CHARS) | set(_RARE_POOL)
    stray = {ch for line in corpus for ch in line if is_cjk(ch) and ch not in allowed}
    if stray:
        raise SystemExit(f"corpus characters outside tables: {''.join(sorted(stray))}")

    n_words = sum(1 for w in WORDS if len(w) >= 2)
    seen = set()
    for line in corpus:
        for w in WORDS:
            if len(w) >= 2 and w not in seen and w in line:
                seen.add(w)
    if len(seen) < n_words:
        gone = sorted(w for w in WORDS if len(w) >= 2 and w not in seen)
        raise SystemExit(f"{len(gone)} words never surface in the corpus: {gone[:20]}")


# ---------------------------------------------------------------------------
# Writers.
# ---------------------------------------------------------------------------

RANDOM_MAP_SEED = 68123


def write_all(outdir: str) -> None:
    pinyin_map = build_pinyin_map()
    corpus = generate_corpus()
    validate(pinyin_map, corpus)

    os.makedirs(outdir, exist_ok=True)
    tables = {
        "pinyin": (pinyin_map, "pinyin with tone digit (5 = neutral), v for u-umlaut"),
        "zhuyin": (build_zhuyin_map(pinyin_map), "bopomofo with tone digit (5 = neutral)"),
        "stroke": (STROKE, "strokes: h horizontal, s vertical, p left-falling, n dot or right-falling, z turn"),
        "wubi": (WUBI, "wubi radical codes"),
        "zhengma": (ZHENGMA, "zhengma radical codes"),
        "cangjie": (CANGJIE, "cangjie radical codes"),
        "random_index": (
            gen_random_map(sorted(pinyin_map), RANDOM_MAP_SEED),
            f"five-digit codes, seed {RANDOM_MAP_SEED}",
        ),
    }
    for name, (bases, note) in tables.items():
        write_mapping_file(
            os.path.join(outdir, f"{name}.tsv"),
            bases,
            header=f"{name} character map, generated by tools/gen_data.py\n{note}",
        )
        print(f"{name}.tsv: {len(bases)} characters")

    words = sorted((w for w in WORDS if len(w) >= 2), key=lambda w: (-WORDS[w], w))
    with open(os.path.join(outdir, "words.tsv"), "w", encoding="utf-8", newline="\n") as f:
        for w in words:
            f.write(f"{w}\t{WORDS[w]}\n")
    print(f"words.tsv: {len(words)} words")

    text = "\n".join(corpus) + "\n"
    with open(os.path.join(outdir, "corpus.txt"), "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    n_cjk = sum(is_cjk(ch) for line in corpus for ch in line)
    print(f"corpus.txt: {len(corpus)} lines, {len(text.encode('utf-8'))} bytes, {n_cjk} CJK chars")


def main() -> None:
    default = os.path.join(_ROOT, "src", "subchar", "data")
    outdir = sys.argv[1] if len(sys.argv) > 1 else default
    write_all(outdir)


if __name__ == "__main__":
    main()
