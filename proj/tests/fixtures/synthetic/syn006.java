public class Syn6 {
    int work0(int n, int[] data, StringBuilder sb) {
        int v21 = n + 2;
        n = v21;
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        System.out.println(n);
        int v21 = n * 2;
        while (v21 < 14) {
            v21++;
            n = n * 2;
            String s30 = "" + v21;
            for (int i3 = 0; i3 < 5; i3++) {
                v21++;
                v21 = 0;
                v21++;
                n++;
                sb.append("ab");
            }
            int v32 = n * 2;
            for (int i3 = 0; i3 < 6; i3++) {
                String s41 = "";
                System.out.println(s41);
            }
        }
        String s20 = "";
        s20 += v21;
        return n;
    }
}
