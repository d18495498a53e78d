int[] copyTail(int[] nums, int c, int j) {
int[] b = new int[nums.length];
for (int i = c+1; i < nums.length; i++) {
    b[j] = nums[i];
    j++;
}
return b;
}
