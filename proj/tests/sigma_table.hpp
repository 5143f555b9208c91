#pragma once

// sigma(i / 1000), i = 0..1000, for sigma_min 0.05, sigma_max 0.5, gamma 1.5,
// evaluated with 50-digit arithmetic.
inline constexpr double kSigmaTable[1001] = {
    0.0, 0.00339443618942586295109, 0.00480240183035668161658,
    0.00588411322553854287183, 0.00679717312595208493072, 0.00760260325128829496069,
    0.00833168775200971824635, 0.00900300439578877036955, 0.00962865362767686244681,
    0.0102170377995827304601, 0.0107742727779578591087, 0.0113049742305585124079,
    0.0118127271007120495861, 0.0123003815744436293467, 0.0127702480122375801482,
    0.0132242300490309919686, 0.0136639182650809668607, 0.0140906578268277483974,
    0.0145055984269130310474, 0.0149097318749983088855, 0.015303920877993371828,
    0.0156889214090543648098, 0.0160654003287880699731, 0.0164339494349362065587,
    0.0167950967872038841326, 0.0171493159264691926011, 0.017497033447884523702,
    0.0178386352733830934518, 0.0181744718865422504732, 0.0185048627321516436635,
    0.0188300999377964364033, 0.0191504514809121491651, 0.0194661638990513184048,
    0.0197774646213749839469, 0.0200845639841107422258, 0.0203876569807963438232,
    0.020686924788745052252, 0.0209825361057298716766, 0.021274648324944233034,
    0.0215634085715231654272, 0.0218489546200485854665, 0.0221314157093220562506,
    0.0224109132681196547399, 0.0226875615635313323317, 0.0229614682817415594695,
    0.0232327350496586101386, 0.0235014579045908807578, 0.0237677277181559137353,
    0.0240316305797559745265, 0.0242932481442347413571, 0.0245526579477200151513,
    0.0248099336951387817973, 0.025065145522448341445, 0.0253183602362481928608,
    0.0255696415331117658775, 0.0258190502006965530189, 0.0260666443024487655725,
    0.0263124793475085653433, 0.0265566084472393938811, 0.0267990824596459135975,
    0.0270399501228062127399, 0.0272792581783223644495, 0.0275170514856867663149,
    0.0277533731283678851348, 0.0279882645123363621823, 0.0282217654576794232566,
    0.0284539142838869260651, 0.0286847478893350865522, 0.0289143018254430296717,
    0.0291426103659320117588, 0.029369706571576773505, 0.0295956223508024099862,
    0.0298203885164478720432, 0.0300440348389882940952, 0.0302665900964823878321,
    0.030488082121487809651, 0.0307085378451664055494, 0.0309279833387823008264,
    0.0311464438527787056625, 0.0313639438536038514359, 0.0315805070584424804354,
    0.0317961564679966282706, 0.0320109143974479267309, 0.0322248025057231939117,
    0.0324378418231755607628, 0.0326500527777847135765, 0.0328614552199719257079,
    0.0330720684461183337098, 0.0332819112208683159894, 0.0334910017982937961791,
    0.0336993579419897651868, 0.0339069969441662474942, 0.0341139356437972858346,
    0.0343201904438832454625, 0.0345257773278788102926, 0.0347307118753354271895,
    0.0349350092768036236806, 0.0351386843480375531634, 0.0353417515435412875492,
    0.0355442249694937597078, 0.0357461183960868384914, 0.035947445269308780718,
    0.0361482187222032320571, 0.0363484515856320284948, 0.0365481563985682693927,
    0.0367473454179444807398, 0.0369460306280791526305, 0.0371442237497035088728,
    0.0373419362486090403264, 0.0375391793439350992434, 0.0377359640161147023878,
    0.0379323010144956194752, 0.0381282008646528245403, 0.0383236738754074557093,
    0.0385187301455665585205, 0.0387133795703970747893, 0.038907631847846778842,
    0.0391014964845241518581, 0.0392949828014485195107, 0.0394880999395811548025,
    0.0396808568651474639347, 0.0398732623747598254643, 0.0400653251003501393157,
    0.0402570535139206600818, 0.0404484559321212362797, 0.0406395405206606518202,
    0.0408303152985593660403, 0.0410207881422505725225, 0.0412109667895361429915,
    0.0414008588434036893605, 0.0415904717757106631452, 0.0417798129307411156908,
    0.0419688895286404638159, 0.0421577086687333424514, 0.0423462773327293776615,
    0.0425346023878214791131, 0.0427226905896810297499, 0.0429105485853541413154,
    0.0430981829160629466908, 0.0432856000199157130775, 0.0434728062345293831899,
    0.0436598077995679842361, 0.0438466108592001859656, 0.0440332214644791389377,
    0.0442196455756475819024, 0.0444058890643710723303, 0.0445919577159020662445,
    0.0447778572311774521874, 0.0449635932288520290229, 0.045149171247270307973,
    0.0453345967463789154823, 0.0455198751095817748917, 0.0457050116455401511785,
    0.0458900115899195539234, 0.046074880107085408931, 0.0462596222917493283225,
    0.0464442431705677322079, 0.0466287477036945020218, 0.0468131407862892760692,
    0.0469974272499829315916, 0.0471816118643017345449, 0.0473656993380515781273,
    0.0475496943206636737376, 0.047733601403503003339, 0.0479174251211407900238,
    0.0481011699525921937668, 0.048284840322520391823, 0.0484684406024081578314,
    0.0486519751116980103349, 0.0488354481189019600079, 0.0490188638426818453023,
    0.0492022264529012083876, 0.0493855400716496270851, 0.0495688087742403838953,
    0.0497520365901823201208, 0.0499352275041266914102, 0.0501183854567898107342,
    0.0503015143458522357807, 0.0504846180268352299585, 0.0506677003139551995758,
    0.0508507649809567842513, 0.0510338157619252531678, 0.0512168563520788363446,
    0.0513998904085415976382, 0.0515829215510974346308, 0.051765953362925769898,
    0.0519489893913194783151, 0.0521320331483855760292, 0.0523150881117291784543,
    0.0524981577251212171074, 0.0526812453991503882585, 0.0528643545118597901881,
    0.0530474884093686903001, 0.0532306504064798484033, 0.0534138437872728081142,
    0.0535970718056835545357, 0.0537803376860709230912, 0.0539636446237701316336,
    0.0541469957856337956685, 0.0543303943105607747198, 0.0545138433100131864985,
    0.0546973458685219145925, 0.0548809050441809248649, 0.0550645238691306956046,
    0.0552482053500310567052, 0.0554319524685237237424, 0.0556157681816848037534,
    0.0557996554224675407892, 0.055983617100135560893, 0.0561676561006868680434,
    0.0563517752872688347774, 0.0565359775005844236671, 0.0567202655592898685455,
    0.0569046422603840373604, 0.0570891103795896917643, 0.057273672671726852014,
    0.0574583318710784694485, 0.057643090691748602726, 0.0578279518280132881253,
    0.0580129179546642885414, 0.0581979917273459003276, 0.0583831757828849918391,
    0.0585684727396144424239, 0.0587538851976901456635, 0.0589394157394017358909,
    0.0591250669294771924019, 0.0593108413153814713092, 0.0594967414276093106829,
    0.0596827697799723504434, 0.0598689288698807044458, 0.0600552211786191182893,
    0.0602416491716178426132, 0.06042821529871834799, 0.060614921994434003992,
    0.0608017716782058415872, 0.0609887667546535147141, 0.061175909613821573675,
    0.0613632026314211598905, 0.0615506481690672285499, 0.0617382485745114027833,
    0.0619260061818705601645, 0.0621139233118512496217, 0.0623020022719700341876,
    0.0624902453567698524591, 0.0626786548480324891513, 0.0628672330149872427217,
    0.0630559821145158757088, 0.0632449043913539311649, 0.0634340020782884963676,
    0.0636232773963524928698, 0.0638127325550155698804, 0.06400236975237167597,
    0.0641921911753233821495, 0.0643821989997630274898, 0.0645723953907507566185,
    0.0647627825026895166583, 0.0649533624794970794472, 0.0651441374547751532096,
    0.0653351095519756462262, 0.0655262808845641434717, 0.0657176535561806556614,
    0.0659092296607976986624, 0.0661010112828757597781, 0.066293000497516206018,
    0.0664851993706116880985, 0.0666776099589940925995, 0.0668702343105800934146,
    0.0670630744645143523838, 0.0672561324513104177829, 0.0674494102929893681633,
    0.067642910003216247889, 0.0678366335874343395994, 0.0680305830429973177467,
    0.0682247603592993262955, 0.0684191675179030226519, 0.0686138064926656288885,
    0.0688086792498630303611, 0.0690037877483119608706, 0.0691991339394903126031,
    0.0693947197676556081881, 0.069590547169961671345, 0.0697866180765735317412,
    0.0699829344107805988611, 0.0701794980891081388843, 0.0703763110214270877885,
    0.0705733751110622331355, 0.0707706922548987962546, 0.0709682643434874458211,
    0.0711660932611477731233, 0.0713641808860702586269, 0.0715625290904167587843,
    0.0717611397404195413809, 0.0719600146964788970856, 0.0721591558132593542515,
    0.0723585649397845234169, 0.0725582439195305973685, 0.0727581945905185320622,
    0.07295841878540493314, 0.0731589183315716722399, 0.0733596950512142567683,
    0.0735607507614289762922, 0.073762087274298848202, 0.0739637063969783848126,
    0.0741656099317772035888, 0.0743677996762425017179, 0.0745702774232404158005,
    0.0747730449610362869832, 0.0749761040733738514315, 0.0751794565395533756141,
    0.0753831041345087554642, 0.0755870486288835980783, 0.0757912917891063042257,
    0.0759958353774641695562, 0.0762006811521765220249, 0.0764058308674669126867,
    0.0766112862736343766588, 0.0768170491171237807047, 0.0770231211405952735519,
    0.0772295040829928547282, 0.0774361996796120773778, 0.0776432096621669002033,
    0.0778505357588557033723, 0.0780581796944264829289, 0.0782661431902412379532,
    0.0784744279643395644301, 0.0786830357315014695051, 0.0788919682033094195334,
    0.0791012270882096350613, 0.0793108140915726456171, 0.0795207309157531169356,
    0.0797309792601489629878, 0.0799415608212597549481, 0.08015247729274443899,
    0.0803637303654783745706, 0.0805753217276097046354, 0.0807872530646150689543,
    0.0809995260593546715812, 0.0812121423921267132176, 0.0814251037407211990528,
    0.0816384117804731324508, 0.0818520681843151046544, 0.0820660746228292904834,
    0.0822804327642988598154, 0.0824951442747588144474, 0.082710210818046259761,
    0.082925634055850120431, 0.0831414156477603092461, 0.0833575572513163579399,
    0.0835740605220555187631, 0.0837909271135603453658, 0.0840081586775057614003,
    0.0842257568637056250962, 0.0844437233201587979107, 0.0846620596930947252043,
    0.0848807676270185367482, 0.0850998487647556747262, 0.0853193047474960567531,
    0.0855391372148377812953, 0.0857593478048303827454, 0.0859799381540176432704,
    0.0862009098974799684249, 0.0864222646688763333951, 0.0866440041004858066161,
    0.0868661298232486573828, 0.0870886434668070539593, 0.0873115466595453585732,
    0.0875348410286300255684, 0.0877585282000491088818, 0.0879826097986513848939,
    0.0882070874481850966058, 0.088431962771336324981, 0.0886572373897669931968,
    0.088882912924152509443, 0.0891089909942190538121, 0.0893354732187805147264,
    0.0895623612157750802538, 0.0897896566023014895728, 0.090017360994654949754,
    0.0902454760083627229396, 0.0904740032582193889139, 0.0907029443583217879722,
    0.0909323009221036489131, 0.0911620745623699068957, 0.0913922668913307158256,
    0.091622879520635159851, 0.0918539140614046684766, 0.0920853721242661397254,
    0.0923172553193847757043, 0.0925495652564966348579, 0.0927823035449409051215,
    0.0930154717936919021174, 0.0932490716113907964651, 0.0934831046063770742155,
    0.0937175723867197343457, 0.0939524765602482271927, 0.0941878187345831376356,
    0.0944236005171666167789, 0.0946598235152925658218, 0.0948964893361365757457,
    0.0951335995867856263874, 0.0953711558742675484102, 0.0956091598055802516301,
    0.095847612987720723094, 0.0960865170277137982583, 0.0963258735326407085573,
    0.0965656841096674086023, 0.096805950366072686198, 0.0970466739092760583142,
    0.0972878563468654560996, 0.0975294992866247019777, 0.0977716043365607818136,
    0.0980141731049309150984, 0.0982572072002694260472, 0.0985007082314144184636,
    0.0987446778075342571796, 0.0989891175381538588358, 0.0992340290331807947216,
    0.0994794139029312083584, 0.0997252737581555504613, 0.0999716102100641338789,
    0.100218424870352511069, 0.100465719351226676628, 0.100713495265428097359,
    0.100961754226258572313, 0.10121049784760492522, 0.101459727743963531667,
    0.101709445530464683372, 0.101959652822896791836, 0.102210351237730433651,
    0.102461542392142239684, 0.102713227904038630342, 0.102965409392079399077,
    0.103218088475701146268, 0.103471266775140565572, 0.103724945911457584825,
    0.103979127506558363525, 0.104233813183218148905, 0.104489004565103992583,
    0.104744703276797329731, 0.105000910943816422694, 0.105257629192638670948,
    0.105514859650722789262, 0.105772603946530855917, 0.106030863709550232773,
    0.106289640570315358999, 0.106548936160429420203, 0.106808752112585894716,
    0.107069090060589978734, 0.107329951639379892004, 0.107591338485048065725,
    0.107853252234862214302, 0.108115694527286292562, 0.108378667002001340037,
    0.108642171299926213882, 0.108906209063238211976, 0.109170781935393587737,
    0.109435891561147958158, 0.109701539586576606548, 0.109967727659094681443,
    0.110234457427477293144, 0.110501730541879509287, 0.110769548653856250869,
    0.111037913416382090107, 0.111306826483870951504, 0.111576289512195717464,
    0.111846304158707739797, 0.112116872082256258415, 0.112387994943207728523,
    0.112659674403465057583, 0.112931912126486753304, 0.113204709777305983907,
    0.113478069022549551901, 0.113751991530456782556, 0.114026478970898328296,
    0.114301533015394890177, 0.114577155337135857608, 0.11485334761099786748,
    0.115130111513563283818, 0.11540744872313859909, 0.115685360919772758261,
    0.115963849785275406699, 0.116242917003235062992, 0.116522564259037217748,
    0.116802793239882359421, 0.117083605634803928197, 0.117365003134686198965,
    0.117646987432282094377, 0.117929560222230928989, 0.118212723201076085477,
    0.118496478067282623887, 0.118780826521254824875, 0.119065770265353667898,
    0.119351311003914245275, 0.119637450443263113041, 0.119924190291735579512,
    0.120211532259692932463, 0.120499478059539605786, 0.120788029405740286537,
    0.121077188014836963208, 0.1213669556054659161, 0.121657333898374650633,
    0.121948324616438774432, 0.122239929484678819012, 0.122532150230277006871,
    0.122824988582593964809, 0.123118446273185384258, 0.123412525035818629407,
    0.123707226606489293912, 0.124002552723437706936, 0.124298505127165389299,
    0.124595085560451460471, 0.124892295768368997159, 0.125190137498301344203,
    0.125488612499958378532, 0.125787722525392726857, 0.126087469329015937841,
    0.126387854667614609419, 0.126688880300366471976, 0.126990547988856428045,
    0.127292859497092549222, 0.127595816591522030936, 0.127899421041047105763,
    0.128203674617040915904, 0.128508579093363345499, 0.128814136246376813389,
    0.129120347854962026969, 0.12942721570053369775, 0.129734741567056219247,
    0.13004292724105930779, 0.130351774511653606879, 0.130661285170546255655,
    0.130971461012056422095, 0.131282303833130801497, 0.13159381543335908084,
    0.131905997614989369577, 0.132218852182943597443, 0.132532380944832879805,
    0.132846585710972851135, 0.133161468294398967131, 0.133477030510881776025,
    0.133793274178942159624, 0.134110201119866544594, 0.134427813157722084526,
    0.134746112119371813281, 0.135065099834489770142, 0.135384778135576097265,
    0.135705148857972109939, 0.136026213839875340139, 0.13634797492235455387,
    0.136670433949364742786, 0.136993592767762090553, 0.137317453227318914446,
    0.137642017180738582638, 0.137967286483670407648, 0.138293262994724516411,
    0.138619948575486697425, 0.138947345090533225419, 0.139275454407445664003,
    0.13960427839682564672, 0.13993381893230963696, 0.140264077890583667156,
    0.14059505715139805769, 0.140926758597582115939, 0.141259184115058815882,
    0.141592335592859458675, 0.141926214923138314622, 0.142260824001187246928,
    0.142596164725450317666, 0.142932238997538376332, 0.143269048722243631398,
    0.14360659580755420526, 0.143944882164668672953, 0.144283909708010585042,
    0.144623680355242975046, 0.144964196027282851792, 0.145305458648315677063,
    0.145647470145809828918, 0.145990232450531051043, 0.146333747496556888511,
    0.146678017221291110296, 0.147023043565478118908, 0.147368828473217347507,
    0.147715373891977644835, 0.148062681772611648329, 0.14841075406937014574,
    0.14875959273991642563, 0.149109199745340617049, 0.149459577050174018763,
    0.149810726622403418337, 0.150162650433485401425, 0.15051535045836065158,
    0.150868828675468240914, 0.151223087066759911932, 0.151578127617714350849,
    0.151933952317351452721, 0.152290563158246578687, 0.152647962136544805645,
    0.153006151251975168665, 0.153365132507864896447, 0.153724907911153640117,
    0.154085479472407695683, 0.154446849205834220423, 0.154809019129295443522,
    0.155171991264322871237, 0.155535767636131486886, 0.155900350273633945956,
    0.156265741209454766598, 0.156631942479944515818, 0.156998956125193991618,
    0.157366784189048401391, 0.157735428719121536831, 0.158104891766809945637,
    0.158475175387307100292, 0.158846281639617564169, 0.159218212586571155256,
    0.159590970294837107751, 0.159964556834938231787, 0.160338974281265071575,
    0.16071422471209006219, 0.161090310209581685293, 0.161467232859818624015,
    0.161844994752803917288, 0.162223597982479113846, 0.162603044646738426173,
    0.162983336847442884626, 0.163364476690434492, 0.163746466285550378762,
    0.164129307746636959212, 0.164513003191564088807, 0.164897554742239222889,
    0.165282964524621577054, 0.165669234668736289406, 0.166056367308688584923,
    0.166444364582677942174, 0.166833228633012262617, 0.167222961606122042711,
    0.16761356565257454907, 0.16800504292708799688, 0.168397395588545731822,
    0.168790625800010415709, 0.169184735728738216059, 0.169579727546192999849,
    0.169975603428060531639, 0.170372365554262676303, 0.17077001610897160659,
    0.171168557280624015705, 0.171567991261935335158, 0.171968320249913958069,
    0.172369546445875468147, 0.172771672055456874565, 0.173174699288630852924,
    0.173578630359719992524, 0.173983467487411050149, 0.174389212894769210562,
    0.174795868809252353928, 0.175203437462725330359, 0.175611921091474241779,
    0.176021321936220731329, 0.176431642242136280482, 0.176842884258856514095,
    0.177255050240495513579, 0.177668142445660138383, 0.178082163137464355994,
    0.178497114583543580648, 0.178912999056069020929, 0.179329818831762036475,
    0.179747576191908503949, 0.180166273422373192496, 0.18058591281361414885,
    0.181006496660697092295, 0.181428027263309819658, 0.181850506925776620524,
    0.182273937957072702852, 0.182698322670838629181, 0.183123663385394763609,
    0.183549962423755729727, 0.183977222113644879677, 0.184405444787508774535,
    0.184834632782531676182, 0.185264788440650050844, 0.185695914108567084485,
    0.186128012137767210223, 0.186561084884530647945, 0.186995134709947956298,
    0.18743016397993459723, 0.187866175065245513254, 0.188303170341489717602,
    0.188741152189144897451, 0.189180122993572030385, 0.189620085145030014253,
    0.190061041038690310623, 0.190502993074651601958, 0.190945943657954462722,
    0.191389895198596044554, 0.191834850111544775691, 0.192280810816755074798,
    0.192727779739182079382, 0.193175759308796388932, 0.193624751960598822976,
    0.19407476013463519419, 0.194525786276011096745, 0.194977832834906710035,
    0.195430902266591617963, 0.195884997031439643926, 0.196340119594943701676,
    0.196796272427730662212, 0.197253458005576236844, 0.19771167880941987662,
    0.198170937325379688236, 0.198631236044767366614, 0.199092577464103144287,
    0.199554964085130757756, 0.200018398414832430966, 0.200482882965443876061,
    0.200948420254469311569, 0.201415012804696498168, 0.201882663144211792191,
    0.202351373806415217018, 0.202821147330035552503, 0.203291986259145442597,
    0.203763893143176521304, 0.204236870536934557137, 0.204710921000614616204,
    0.205186047099816244086, 0.205662251405558666653, 0.206139536494296009965,
    0.2066179049479325394, 0.20709735935383791817, 0.207577902304862485354,
    0.208059536399352553606, 0.208542264241165726686, 0.209026088439686236944,
    0.209511011609840302918, 0.209997036372111507184, 0.210484165352556194596,
    0.210972401182818891074, 0.211461746500147743067, 0.211952203947409977848,
    0.212443776173107384766, 0.212936465831391817623, 0.21343027558208071829,
    0.213925208090672661718, 0.214421266028362922485, 0.214918452072059063017,
    0.215416768904396543618, 0.21591621921375435446, 0.216416805694270669661,
    0.216918531045858523597, 0.217421397974221509587, 0.217925409190869501083,
    0.218430567413134395511, 0.218936875364185880898, 0.219444335773047225414,
    0.219952951374611089985, 0.220462724909655364095, 0.220973659124859024924,
    0.221485756772818019951, 0.221999020612061173171, 0.222513453407066115046,
    0.223029057928275236333, 0.223545836952111665926, 0.224063793260995272845,
    0.224582929643358692501, 0.225103248893663377382, 0.225624753812415672284,
    0.226147447206182914228, 0.226671331887609557193, 0.227196410675433321796,
    0.227722686394501370058, 0.228250161875786505389, 0.228778839956403397911,
    0.229308723479624835273, 0.229839815294897999072, 0.230372118257860767023,
    0.230905635230358041, 0.231440369080458101093, 0.231976322682468985797,
    0.232513498916954898473, 0.233051900670752640214, 0.23359153083698806924,
    0.234132392315092586955, 0.234674488010819650797, 0.235217820836261314014,
    0.235762393709864792487, 0.236308209556449058739, 0.236855271307221463261,
    0.237403581899794383266, 0.237953144278201899032, 0.238503961392916497926,
    0.239056036200865806274, 0.239609371665449349176, 0.240163970756555338413,
    0.240719836450577488569, 0.241276971730431861496, 0.241835379585573739244,
    0.242395063012014525602, 0.242956025012338676356, 0.243518268595720658407,
    0.244081796777941937869, 0.244646612581407997283, 0.245212719035165382058,
    0.245780119174918776289, 0.24634881604304810806, 0.246918812688625684364,
    0.247490112167433355778, 0.248062717541979711004, 0.24863663188151730141,
    0.249211858262059895698, 0.249788399766399764832, 0.250366259484124997331,
    0.250945440511636845082, 0.251525945952167099776, 0.252107778915795500104,
    0.252690942519467169845, 0.253275439887010086947, 0.253861274149152583767,
    0.25444844844354087855, 0.255036965914756638317, 0.255626829714334573248,
    0.256218043000780062722, 0.256810608939586813105, 0.257404530703254547443,
    0.25799981147130672716, 0.258596454430308305906, 0.259194462773883515666,
    0.259793839702733685261, 0.260394588424655091373, 0.260996712154556842206,
    0.261600214114478793914, 0.262205097533609499929, 0.262811365648304193303,
    0.26341902170210280219, 0.264028068945747998601, 0.264638510637203280551,
    0.265250350041671087725, 0.265863590431610950783, 0.26647823508675767444,
    0.267094287294139554431, 0.267711750348096628502, 0.268330627550298961537,
    0.26895092220976496496, 0.269572637642879750521, 0.270195777173413518605,
    0.270820344132539981184, 0.271446341858854819531, 0.272073773698394176833,
    0.272702643004653185813, 0.2733329531386045315, 0.273964707468717049262,
    0.274597909370974358233, 0.275232562228893530251, 0.275868669433543794444,
    0.276506234383565277578, 0.277145260485187780294, 0.277785751152249589366,
    0.278427709806216326095, 0.27907113987619983097, 0.279716044798977084723,
    0.280362428019009165894, 0.281010292988460245038, 0.281659643167216615704,
    0.282310482022905762295, 0.282962813030915464952, 0.283616639674412941571,
    0.284271965444364027101, 0.28492879383955239021, 0.285587128366598787496,
    0.286246972539980355313, 0.286908329882049939387, 0.287571203923055462307,
    0.288235598201159329048, 0.288901516262457870631, 0.289568961661000826052,
    0.290237937958810862611, 0.290908448725903134754, 0.291580497540304881571,
    0.292254087988075063057, 0.29292922366332403528, 0.293605908168233264563,
    0.294284145113075080827, 0.294963938116232470202, 0.29564529080421890704,
    0.296328206811698225467, 0.297012689781504530572, 0.297698743364662149395,
    0.298386371220405621811, 0.29907557701619973145, 0.299766364427759576781,
    0.300458737139070682479, 0.301152698842409151208, 0.301848253238361855944,
    0.302545404035846672969, 0.303244154952132755649, 0.303944509712860849149,
    0.304646472052063646184, 0.305350045712186183952, 0.306055234444106282368,
    0.306762042007155023734, 0.307470472169137273959, 0.308180528706352245472,
    0.308892215403614101946, 0.309605536054272604963, 0.310320494460233802752,
    0.311037094431980761121, 0.311755339788594336716, 0.312475234357773992733,
    0.313196781975858657217, 0.313919986487847624068, 0.314644851747421496885,
    0.315371381616963175785, 0.31609957996757888731, 0.316829450679119257569,
    0.31756099764020042873, 0.318294224748225218999, 0.319029135909404326207,
    0.319765735038777575151, 0.320504026060235208798, 0.321244012906539223493,
    0.321985699519344748307, 0.322729089849221468633, 0.32347418785567509419,
    0.32422099750716887154, 0.324969522781145141256, 0.325719767664046939882,
    0.326471736151339646802, 0.327225432247532676149, 0.327980859966201213903,
    0.328738023330008000277, 0.32949692637072515756, 0.330257573129256063516,
    0.331019967655657270488, 0.331784114009160470332, 0.332550016258194505325,
    0.333317678480407425149, 0.334087104762688590128, 0.334858299201190820801,
    0.335631265901352594005, 0.336406008977920285575, 0.337182532554970459805,
    0.337960840765932205797, 0.338740937753609520832, 0.339522827670203740909,
    0.340306514677336018556, 0.34109200294606984808, 0.341879296656933638367,
    0.342668399999943333374, 0.343459317174625080448, 0.344252052390037946601,
    0.345046609864796682881, 0.345842993827094536968, 0.346641208514726114138,
    0.347441258175110286719, 0.348243147065313152181, 0.349046879452071039994,
    0.349852459611813567391, 0.350659891830686744165, 0.351469180404576126646,
    0.352280329639130020979, 0.353093343849782735861, 0.353908227361777884848,
    0.354724984510191738391, 0.355543619639956625716, 0.356364137105884386712,
    0.357186541272689873934, 0.358010836515014504877, 0.358837027217449864661,
    0.359665117774561359245, 0.360495112590911919332, 0.361327016081085755084,
    0.362160832669712161793, 0.362996566791489376652, 0.363834222891208486749,
    0.36467380542377738844, 0.365515318854244798228, 0.366358767657824315291,
    0.367204156319918535803, 0.368051489336143219178, 0.368900771212351506382,
    0.369752006464658190461, 0.370605199619464039403, 0.371460355213480171504,
    0.372317477793752483353, 0.373176571917686130588, 0.374037642153070061566,
    0.374900693078101604088, 0.375765729281411105307, 0.376632755362086624982,
    0.377501775929698682208, 0.378372795604325055756, 0.379245819016575638188,
    0.38012085080761734387, 0.380997895629199071028, 0.381876958143676718001,
    0.382758043024038253825, 0.383641154953928843292, 0.384526298627676026634,
    0.385413478750314953966, 0.386302700037613674639, 0.38719396721609848165,
    0.388087285023079311244, 0.388982658206675197865,
};
